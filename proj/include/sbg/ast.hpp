#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sbg/diagnostics.hpp"

namespace sbg {

// Content condition a stepped-on square must satisfy: e / p / w.
enum class OnCond : std::uint8_t { Empty, Opponent, Own };

char to_char(OnCond on);

// One alphabet symbol: a relative step plus the required content of the
// square it lands on. dx is columns (positive = right), dy is rows
// (positive = forward from the mover's point of view).
struct MoveLetter {
  int dx = 0;
  int dy = 0;
  OnCond on = OnCond::Empty;

  friend auto operator<=>(const MoveLetter&, const MoveLetter&) = default;
};

// Movement regular expression. Sum/Concat are n-ary (>= 2 children),
// Power/Star have exactly one child. Value type: nodes own their children.
class RegExpr {
 public:
  enum class Kind { Letter, Concat, Sum, Power, Star };

  RegExpr() = default;

  static RegExpr letter(int dx, int dy, OnCond on);
  static RegExpr letter(MoveLetter l);
  static RegExpr concat(std::vector<RegExpr> children);
  static RegExpr sum(std::vector<RegExpr> children);
  static RegExpr power(RegExpr child, int exponent);
  static RegExpr star(RegExpr child);

  Kind kind() const { return kind_; }
  const MoveLetter& letter_value() const { return letter_; }
  const std::vector<RegExpr>& children() const { return children_; }
  const RegExpr& child() const { return children_.front(); }
  int exponent() const { return exponent_; }

  // Structural comparison; source spans are not compared.
  bool operator==(const RegExpr& other) const;

  SourceSpan span;  // set by the parser, zero for programmatic trees

 private:
  Kind kind_ = Kind::Letter;
  MoveLetter letter_;
  int exponent_ = 0;
  std::vector<RegExpr> children_;
};

// Board coordinates, origin at the lower left corner.
struct Coord {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Coord&, const Coord&) = default;
};

struct BoardDecl {
  int width = 0;
  int height = 0;
  std::vector<std::string> rows;  // as written: top row first
  std::vector<SourceSpan> row_spans;
  SourceSpan dims_span;

  bool operator==(const BoardDecl& other) const {
    return width == other.width && height == other.height && rows == other.rows;
  }
};

struct ReachGoal {
  char letter = 'A';            // case identifies the owning player
  std::vector<Coord> squares;   // absolute coordinates, non-empty

  friend bool operator==(const ReachGoal&, const ReachGoal&) = default;
};

struct CountGoal {
  char letter = 'A';
  std::int64_t count = 0;

  friend bool operator==(const CountGoal&, const CountGoal&) = default;
};

struct GoalEntry {
  std::variant<ReachGoal, CountGoal> goal;
  SourceSpan span;

  bool is_reach() const { return std::holds_alternative<ReachGoal>(goal); }
  const ReachGoal& reach() const { return std::get<ReachGoal>(goal); }
  const CountGoal& count() const { return std::get<CountGoal>(goal); }

  bool operator==(const GoalEntry& other) const { return goal == other.goal; }
};

struct GoalsDecl {
  std::int64_t turnlimit = 0;   // half-moves
  std::vector<GoalEntry> entries;
  SourceSpan turnlimit_span;

  bool operator==(const GoalsDecl& other) const {
    return turnlimit == other.turnlimit && entries == other.entries;
  }
};

struct PieceRule {
  char letter = 'A';            // uppercase type letter
  RegExpr movement;
  SourceSpan letter_span;

  bool operator==(const PieceRule& other) const {
    return letter == other.letter && movement == other.movement;
  }
};

struct GameSpec {
  std::string name;
  BoardDecl board;
  std::vector<PieceRule> piece_rules;  // declaration order, letters unique
  GoalsDecl goals;
  SourceSpan name_span;

  // Movement expression for an uppercase type letter, or nullptr.
  const RegExpr* rule_for(char type_letter) const;

  bool operator==(const GameSpec& other) const {
    return name == other.name && board == other.board &&
           piece_rules == other.piece_rules && goals == other.goals;
  }
};

}  // namespace sbg
