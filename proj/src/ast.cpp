#include "sbg/ast.hpp"

#include <utility>

namespace sbg {

char to_char(OnCond on) {
  switch (on) {
    case OnCond::Empty: return 'e';
    case OnCond::Opponent: return 'p';
    case OnCond::Own: return 'w';
  }
  return '?';
}

RegExpr RegExpr::letter(int dx, int dy, OnCond on) {
  return letter(MoveLetter{dx, dy, on});
}

RegExpr RegExpr::letter(MoveLetter l) {
  RegExpr e;
  e.kind_ = Kind::Letter;
  e.letter_ = l;
  return e;
}

RegExpr RegExpr::concat(std::vector<RegExpr> children) {
  RegExpr e;
  e.kind_ = Kind::Concat;
  e.children_ = std::move(children);
  return e;
}

RegExpr RegExpr::sum(std::vector<RegExpr> children) {
  RegExpr e;
  e.kind_ = Kind::Sum;
  e.children_ = std::move(children);
  return e;
}

RegExpr RegExpr::power(RegExpr child, int exponent) {
  RegExpr e;
  e.kind_ = Kind::Power;
  e.exponent_ = exponent;
  e.children_.push_back(std::move(child));
  return e;
}

RegExpr RegExpr::star(RegExpr child) {
  RegExpr e;
  e.kind_ = Kind::Star;
  e.children_.push_back(std::move(child));
  return e;
}

bool RegExpr::operator==(const RegExpr& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Letter: return letter_ == other.letter_;
    case Kind::Power:
      if (exponent_ != other.exponent_) return false;
      [[fallthrough]];
    case Kind::Star:
    case Kind::Concat:
    case Kind::Sum: return children_ == other.children_;
  }
  return false;
}

const RegExpr* GameSpec::rule_for(char type_letter) const {
  for (const PieceRule& rule : piece_rules) {
    if (rule.letter == type_letter) return &rule.movement;
  }
  return nullptr;
}

}  // namespace sbg
