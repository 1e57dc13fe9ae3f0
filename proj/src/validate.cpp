#include "sbg/validate.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>

namespace sbg {
namespace {

class Validator {
 public:
  explicit Validator(const GameSpec& spec) : spec_(spec) {}

  std::vector<Diagnostic> run() {
    check_name();
    check_board_shape();
    check_duplicate_rules();
    if (board_usable_) {
      check_displacements();
      check_goal_squares();
      check_immovable_pieces();
      check_goal_plausibility();
    }
    sort_by_location(diags_);
    return std::move(diags_);
  }

 private:
  void add(Severity sev, SourceSpan where, std::string code, std::string message) {
    diags_.push_back(Diagnostic{sev, where, std::move(code), std::move(message)});
  }

  void check_name() {
    bool blank = spec_.name.find_first_not_of(' ') == std::string::npos;
    if (blank) {
      add(Severity::Warning, spec_.name_span, "BlankName",
          "game name consists only of spaces");
    }
  }

  void check_board_shape() {
    const BoardDecl& board = spec_.board;
    if (board.width <= 0 || board.height <= 0) {
      add(Severity::Error, board.dims_span, "EmptyBoard",
          "board dimensions must be positive, got " +
              std::to_string(board.width) + "x" + std::to_string(board.height));
      board_usable_ = false;
    }
    if (static_cast<int>(board.rows.size()) != board.height) {
      add(Severity::Error, board.dims_span, "RowCountMismatch",
          "board declares " + std::to_string(board.rows.size()) +
              " rows, expected " + std::to_string(board.height));
      board_usable_ = false;
    }
    for (std::size_t i = 0; i < board.rows.size(); ++i) {
      if (static_cast<int>(board.rows[i].size()) != board.width) {
        add(Severity::Error, row_span(i), "RowLengthMismatch",
            "row " + std::to_string(i + 1) + " has " +
                std::to_string(board.rows[i].size()) + " squares, expected " +
                std::to_string(board.width));
        board_usable_ = false;
      }
    }
  }

  void check_duplicate_rules() {
    std::set<char> seen;
    for (const PieceRule& rule : spec_.piece_rules) {
      if (!seen.insert(rule.letter).second) {
        add(Severity::Error, rule.letter_span, "DuplicatePieceRule",
            std::string("piece '") + rule.letter +
                "' already has a movement rule");
      }
    }
  }

  void check_displacements() {
    for (const PieceRule& rule : spec_.piece_rules) {
      walk_expr(rule.movement);
    }
  }

  void walk_expr(const RegExpr& e) {
    switch (e.kind()) {
      case RegExpr::Kind::Letter: {
        const MoveLetter& l = e.letter_value();
        if (std::abs(l.dx) >= spec_.board.width ||
            std::abs(l.dy) >= spec_.board.height) {
          std::ostringstream msg;
          msg << "displacement (" << l.dx << ',' << l.dy
              << ") can never stay on a " << spec_.board.width << "x"
              << spec_.board.height << " board";
          add(Severity::Error, e.span, "DisplacementOutOfRange", msg.str());
        }
        break;
      }
      case RegExpr::Kind::Power:
        if (static_cast<std::int64_t>(e.exponent()) >
            static_cast<std::int64_t>(spec_.board.width) * spec_.board.height) {
          add(Severity::Warning, e.span, "PowerExponentLarge",
              "power exponent " + std::to_string(e.exponent()) +
                  " exceeds the number of board squares");
        }
        walk_expr(e.child());
        break;
      default:
        for (const RegExpr& child : e.children()) walk_expr(child);
        break;
    }
  }

  void check_goal_squares() {
    for (const GoalEntry& entry : spec_.goals.entries) {
      if (!entry.is_reach()) continue;
      for (const Coord& sq : entry.reach().squares) {
        if (sq.x >= spec_.board.width || sq.y >= spec_.board.height) {
          add(Severity::Error, entry.span, "ReachSquareOffBoard",
              "goal square (" + std::to_string(sq.x) + ", " +
                  std::to_string(sq.y) + ") is off the board");
        }
      }
    }
  }

  // Character at board coordinates; valid only when the board shape checks
  // passed. Row 0 of the declaration is the top of the board.
  char at(int x, int y) const {
    return spec_.board.rows[spec_.board.height - 1 - y][x];
  }

  int count_of(char cased_letter) const {
    int n = 0;
    for (const std::string& row : spec_.board.rows) {
      for (char c : row) {
        if (c == cased_letter) ++n;
      }
    }
    return n;
  }

  SourceSpan row_span(std::size_t i) const {
    return i < spec_.board.row_spans.size() ? spec_.board.row_spans[i]
                                            : spec_.board.dims_span;
  }

  void check_immovable_pieces() {
    std::set<char> warned;
    for (std::size_t i = 0; i < spec_.board.rows.size(); ++i) {
      const std::string& row = spec_.board.rows[i];
      for (std::size_t x = 0; x < row.size(); ++x) {
        if (row[x] == '.') continue;
        char type = static_cast<char>(std::toupper(static_cast<unsigned char>(row[x])));
        if (spec_.rule_for(type) != nullptr) continue;
        if (!warned.insert(type).second) continue;
        SourceSpan where = row_span(i);
        if (where.line > 0) {
          where.column += 1 + static_cast<int>(x);  // skip the opening '|'
          where.end_line = where.line;
          where.end_column = where.column + 1;
        }
        add(Severity::Warning, where, "ImmovablePiece",
            std::string("piece type '") + type +
                "' has no movement rule and can never move");
      }
    }
  }

  void check_goal_plausibility() {
    for (const GoalEntry& entry : spec_.goals.entries) {
      if (entry.is_reach()) {
        const ReachGoal& reach = entry.reach();
        if (count_of(reach.letter) == 0) {
          add(Severity::Warning, entry.span, "GoalPieceAbsent",
              std::string("goal piece '") + reach.letter +
                  "' is not on the initial board");
        }
        for (const Coord& sq : reach.squares) {
          if (sq.x >= spec_.board.width || sq.y >= spec_.board.height) continue;
          if (at(sq.x, sq.y) == reach.letter) {
            add(Severity::Warning, entry.span, "ReachAlreadySatisfied",
                std::string("goal piece '") + reach.letter +
                    "' already stands on (" + std::to_string(sq.x) + ", " +
                    std::to_string(sq.y) + ") in the initial position");
            break;
          }
        }
      } else {
        const CountGoal& count = entry.count();
        int initial = count_of(count.letter);
        if (count.count >= initial) {
          add(Severity::Warning, entry.span, "PieceCountThresholdHigh",
              std::string("piece-count threshold ") +
                  std::to_string(count.count) + " for '" + count.letter +
                  "' is not below the initial count " + std::to_string(initial));
        }
        if (count_of(count.letter) == 0) {
          add(Severity::Warning, entry.span, "GoalPieceAbsent",
              std::string("goal piece '") + count.letter +
                  "' is not on the initial board");
        }
      }
    }
  }

  const GameSpec& spec_;
  std::vector<Diagnostic> diags_;
  bool board_usable_ = true;
};

}  // namespace

std::vector<Diagnostic> validate(const GameSpec& spec) {
  return Validator(spec).run();
}

}  // namespace sbg
