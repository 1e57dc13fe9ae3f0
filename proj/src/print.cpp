#include "sbg/print.hpp"

#include <sstream>

namespace sbg {
namespace {

void print_expr(std::ostream& out, const RegExpr& e);

// A Sum child that is itself a Sum must be parenthesized or it would
// flatten on reparse; same for Concat inside Concat.
void print_sum_child(std::ostream& out, const RegExpr& e) {
  if (e.kind() == RegExpr::Kind::Sum) {
    out << '(';
    print_expr(out, e);
    out << ')';
  } else {
    print_expr(out, e);
  }
}

void print_concat_child(std::ostream& out, const RegExpr& e) {
  if (e.kind() == RegExpr::Kind::Sum || e.kind() == RegExpr::Kind::Concat) {
    out << '(';
    print_expr(out, e);
    out << ')';
  } else {
    print_expr(out, e);
  }
}

// Power/Star attach directly to a letter triplet; anything else gets the
// parenthesized form the grammar requires.
void print_powered_base(std::ostream& out, const RegExpr& e) {
  if (e.kind() == RegExpr::Kind::Letter) {
    print_expr(out, e);
  } else {
    out << '(';
    print_expr(out, e);
    out << ')';
  }
}

void print_expr(std::ostream& out, const RegExpr& e) {
  switch (e.kind()) {
    case RegExpr::Kind::Letter:
      out << to_string(e.letter_value());
      break;
    case RegExpr::Kind::Concat:
      for (const RegExpr& child : e.children()) print_concat_child(out, child);
      break;
    case RegExpr::Kind::Sum: {
      bool first = true;
      for (const RegExpr& child : e.children()) {
        if (!first) out << " + ";
        first = false;
        print_sum_child(out, child);
      }
      break;
    }
    case RegExpr::Kind::Power:
      print_powered_base(out, e.child());
      out << '^' << e.exponent();
      break;
    case RegExpr::Kind::Star:
      print_powered_base(out, e.child());
      out << "^*";
      break;
  }
}

}  // namespace

std::string to_string(const MoveLetter& l) {
  std::ostringstream out;
  out << '(' << l.dx << ',' << l.dy << ',' << to_char(l.on) << ')';
  return out.str();
}

std::string to_string(const RegExpr& e) {
  std::ostringstream out;
  print_expr(out, e);
  return out.str();
}

std::string pretty_print(const GameSpec& spec) {
  std::ostringstream out;
  out << "<<" << spec.name << ">>\n";
  out << "<BOARD>\n";
  out << spec.board.width << ' ' << spec.board.height << '\n';
  for (const std::string& row : spec.board.rows) {
    out << '|' << row << "|\n";
  }
  out << "<PIECES>\n";
  for (const PieceRule& rule : spec.piece_rules) {
    out << rule.letter << ' ' << to_string(rule.movement) << " &\n";
  }
  out << "<GOALS>\n";
  out << spec.goals.turnlimit << " &\n";
  for (const GoalEntry& entry : spec.goals.entries) {
    if (entry.is_reach()) {
      const ReachGoal& reach = entry.reach();
      out << '@' << reach.letter << ' ';
      bool first = true;
      for (const Coord& sq : reach.squares) {
        if (!first) out << ", ";
        first = false;
        out << sq.x << ' ' << sq.y;
      }
      out << " &\n";
    } else {
      const CountGoal& count = entry.count();
      out << '#' << count.letter << ' ' << count.count << " &\n";
    }
  }
  return out.str();
}

}  // namespace sbg
