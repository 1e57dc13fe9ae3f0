#include "oracle.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace sbg::testing {
namespace {

bool content_ok(SquareContent content, OnCond on) {
  return (on == OnCond::Empty && content == SquareContent::Empty) ||
         (on == OnCond::Opponent && content == SquareContent::Opponent) ||
         (on == OnCond::Own && content == SquareContent::Own);
}

using Cont = std::function<void(Coord, std::size_t)>;

struct Enumerator {
  const OccupancyView& view;
  std::size_t steps_left;

  void spend() {
    if (steps_left == 0) throw OracleBudgetExceeded("enumeration budget exhausted");
    --steps_left;
  }

  // Calls cont once for every applicable word of L(e) starting at sq with
  // at most len letters, passing the square it ends on and the remaining
  // length budget.
  void walk(const RegExpr& e, Coord sq, std::size_t len, const Cont& cont) {
    spend();
    switch (e.kind()) {
      case RegExpr::Kind::Letter: {
        if (len == 0) return;
        const MoveLetter& l = e.letter_value();
        Coord next{sq.x + l.dx, sq.y + l.dy};
        if (content_ok(view.at(next.x, next.y), l.on)) cont(next, len - 1);
        return;
      }
      case RegExpr::Kind::Concat:
        walk_seq(e.children(), 0, sq, len, cont);
        return;
      case RegExpr::Kind::Sum:
        for (const RegExpr& child : e.children()) walk(child, sq, len, cont);
        return;
      case RegExpr::Kind::Power:
        walk_repeat(e.child(), static_cast<std::size_t>(e.exponent()), sq, len, cont);
        return;
      case RegExpr::Kind::Star:
        walk_star(e.child(), sq, len, cont);
        return;
    }
  }

  void walk_seq(const std::vector<RegExpr>& children, std::size_t i, Coord sq,
                std::size_t len, const Cont& cont) {
    if (i == children.size()) {
      cont(sq, len);
      return;
    }
    walk(children[i], sq, len, [&](Coord s, std::size_t l) {
      walk_seq(children, i + 1, s, l, cont);
    });
  }

  void walk_repeat(const RegExpr& child, std::size_t n, Coord sq, std::size_t len,
                   const Cont& cont) {
    if (n == 0) {
      cont(sq, len);
      return;
    }
    walk(child, sq, len, [&](Coord s, std::size_t l) {
      walk_repeat(child, n - 1, s, l, cont);
    });
  }

  void walk_star(const RegExpr& child, Coord sq, std::size_t len, const Cont& cont) {
    cont(sq, len);
    walk(child, sq, len, [&](Coord s, std::size_t l) {
      // A zero-length iteration repeats forever without progress; one pass
      // already covered its contribution.
      if (l < len) walk_star(child, s, l, cont);
    });
  }
};

}  // namespace

std::size_t thompson_state_bound(const RegExpr& e) {
  switch (e.kind()) {
    case RegExpr::Kind::Letter: return 2;
    case RegExpr::Kind::Concat: {
      std::size_t n = 0;
      for (const RegExpr& child : e.children()) n += thompson_state_bound(child);
      return n;
    }
    case RegExpr::Kind::Sum: {
      std::size_t n = 2;
      for (const RegExpr& child : e.children()) n += thompson_state_bound(child);
      return n;
    }
    case RegExpr::Kind::Power:
      return e.exponent() == 0
                 ? 1
                 : static_cast<std::size_t>(e.exponent()) * thompson_state_bound(e.child());
    case RegExpr::Kind::Star:
      return 2 + thompson_state_bound(e.child());
  }
  return 0;
}

std::set<Word> expand_language(const RegExpr& e) {
  switch (e.kind()) {
    case RegExpr::Kind::Letter:
      return {Word{e.letter_value()}};
    case RegExpr::Kind::Concat: {
      std::set<Word> acc{Word{}};
      for (const RegExpr& child : e.children()) {
        std::set<Word> rhs = expand_language(child);
        std::set<Word> next;
        for (const Word& a : acc) {
          for (const Word& b : rhs) {
            Word w = a;
            w.insert(w.end(), b.begin(), b.end());
            next.insert(std::move(w));
          }
        }
        acc = std::move(next);
      }
      return acc;
    }
    case RegExpr::Kind::Sum: {
      std::set<Word> acc;
      for (const RegExpr& child : e.children()) {
        std::set<Word> part = expand_language(child);
        acc.insert(part.begin(), part.end());
      }
      return acc;
    }
    case RegExpr::Kind::Power: {
      std::set<Word> acc{Word{}};
      std::set<Word> base = expand_language(e.child());
      for (int i = 0; i < e.exponent(); ++i) {
        std::set<Word> next;
        for (const Word& a : acc) {
          for (const Word& b : base) {
            Word w = a;
            w.insert(w.end(), b.begin(), b.end());
            next.insert(std::move(w));
          }
        }
        acc = std::move(next);
      }
      return acc;
    }
    case RegExpr::Kind::Star:
      throw std::logic_error("expand_language does not handle Star; use Power");
  }
  return {};
}

bool word_applicable(const Word& w, const OccupancyView& view, Coord from) {
  Coord sq = from;
  for (const MoveLetter& l : w) {
    sq = {sq.x + l.dx, sq.y + l.dy};
    if (!content_ok(view.at(sq.x, sq.y), l.on)) return false;
  }
  return true;
}

Coord word_endpoint(const Word& w, Coord from) {
  Coord sq = from;
  for (const MoveLetter& l : w) sq = {sq.x + l.dx, sq.y + l.dy};
  return sq;
}

std::vector<Coord> enum_destinations(const RegExpr& e, const OccupancyView& view,
                                     Coord from, std::size_t max_len,
                                     std::size_t budget) {
  std::set<Coord> dests;
  Enumerator enumerator{view, budget};
  enumerator.walk(e, from, max_len,
                  [&](Coord sq, std::size_t) { dests.insert(sq); });
  return {dests.begin(), dests.end()};
}

std::vector<Coord> relation_destinations(const RegExpr& e, const OccupancyView& view,
                                         int width, int height, Coord from) {
  const std::size_t n = static_cast<std::size_t>(width) * height;
  using Mat = std::vector<std::vector<bool>>;
  auto index = [&](Coord sq) { return static_cast<std::size_t>(sq.y) * width + sq.x; };
  auto identity = [&] {
    Mat m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
    return m;
  };
  auto multiply = [&](const Mat& a, const Mat& b) {
    Mat m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!a[i][k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (b[k][j]) m[i][j] = true;
        }
      }
    }
    return m;
  };

  std::function<Mat(const RegExpr&)> eval = [&](const RegExpr& expr) -> Mat {
    switch (expr.kind()) {
      case RegExpr::Kind::Letter: {
        Mat m(n, std::vector<bool>(n, false));
        const MoveLetter& l = expr.letter_value();
        for (int y = 0; y < height; ++y) {
          for (int x = 0; x < width; ++x) {
            Coord to{x + l.dx, y + l.dy};
            if (to.x < 0 || to.x >= width || to.y < 0 || to.y >= height) continue;
            if (content_ok(view.at(to.x, to.y), l.on)) {
              m[index({x, y})][index(to)] = true;
            }
          }
        }
        return m;
      }
      case RegExpr::Kind::Concat: {
        Mat m = eval(expr.children().front());
        for (std::size_t i = 1; i < expr.children().size(); ++i) {
          m = multiply(m, eval(expr.children()[i]));
        }
        return m;
      }
      case RegExpr::Kind::Sum: {
        Mat m(n, std::vector<bool>(n, false));
        for (const RegExpr& child : expr.children()) {
          Mat part = eval(child);
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              if (part[i][j]) m[i][j] = true;
            }
          }
        }
        return m;
      }
      case RegExpr::Kind::Power: {
        Mat m = identity();
        Mat base = eval(expr.child());
        for (int i = 0; i < expr.exponent(); ++i) m = multiply(m, base);
        return m;
      }
      case RegExpr::Kind::Star: {
        // Reflexive-transitive closure by Warshall.
        Mat m = eval(expr.child());
        for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t i = 0; i < n; ++i) {
            if (!m[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
              if (m[k][j]) m[i][j] = true;
            }
          }
        }
        return m;
      }
    }
    throw std::logic_error("unreachable regexp kind");
  };

  Mat m = eval(e);
  std::vector<Coord> dests;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (m[index(from)][index({x, y})]) dests.push_back({x, y});
    }
  }
  std::sort(dests.begin(), dests.end());
  return dests;
}

namespace {

RegExpr orient_expr(const RegExpr& e, Player mover) {
  if (mover == Player::White) return e;
  switch (e.kind()) {
    case RegExpr::Kind::Letter: {
      const MoveLetter& l = e.letter_value();
      return RegExpr::letter(-l.dx, -l.dy, l.on);
    }
    case RegExpr::Kind::Concat:
    case RegExpr::Kind::Sum: {
      std::vector<RegExpr> children;
      for (const RegExpr& child : e.children()) {
        children.push_back(orient_expr(child, mover));
      }
      return e.kind() == RegExpr::Kind::Concat
                 ? RegExpr::concat(std::move(children))
                 : RegExpr::sum(std::move(children));
    }
    case RegExpr::Kind::Power:
      return RegExpr::power(orient_expr(e.child(), mover), e.exponent());
    case RegExpr::Kind::Star:
      return RegExpr::star(orient_expr(e.child(), mover));
  }
  throw std::logic_error("unreachable regexp kind");
}

template <typename DestFn>
std::vector<Move> moves_with(const GameSpec& spec, const GameState& state,
                             DestFn&& dests_for) {
  std::vector<Move> moves;
  const Position& pos = state.position;
  PositionView view(pos, state.to_move);
  for (int y = 0; y < pos.height; ++y) {
    for (int x = 0; x < pos.width; ++x) {
      char c = pos.at(x, y);
      if (c == '.') continue;
      bool white_piece = std::isupper(static_cast<unsigned char>(c)) != 0;
      if ((state.to_move == Player::White) != white_piece) continue;
      char type = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      const RegExpr* rule = spec.rule_for(type);
      if (rule == nullptr) continue;
      RegExpr oriented = orient_expr(*rule, state.to_move);
      for (Coord to : dests_for(oriented, view, Coord{x, y})) {
        moves.push_back(Move{{x, y}, to});
      }
    }
  }
  std::sort(moves.begin(), moves.end());
  return moves;
}

}  // namespace

std::vector<Move> oracle_legal_moves(const GameSpec& spec, const GameState& state) {
  const std::size_t squares =
      static_cast<std::size_t>(spec.board.width) * spec.board.height;
  return moves_with(spec, state,
                    [&](const RegExpr& e, const OccupancyView& view, Coord from) {
                      std::size_t max_len = thompson_state_bound(e) * squares;
                      return enum_destinations(e, view, from, max_len);
                    });
}

std::vector<Move> relation_legal_moves(const GameSpec& spec, const GameState& state) {
  return moves_with(spec, state,
                    [&](const RegExpr& e, const OccupancyView& view, Coord from) {
                      return relation_destinations(e, view, spec.board.width,
                                                   spec.board.height, from);
                    });
}

namespace {

struct OracleVerdict {
  Outcome outcome = Outcome::Ongoing;
  std::vector<Move> moves;
};

OracleVerdict oracle_adjudicate(const GameSpec& spec, const GameState& state) {
  const Position& pos = state.position;
  if (state.half_moves_played > 0) {
    Player mover = opponent(state.to_move);
    bool reach[2] = {false, false};
    bool loss[2] = {false, false};
    for (const GoalEntry& entry : spec.goals.entries) {
      if (entry.is_reach()) {
        Player owner = std::isupper(static_cast<unsigned char>(entry.reach().letter))
                           ? Player::White
                           : Player::Black;
        for (const Coord& sq : entry.reach().squares) {
          if (pos.on_board(sq.x, sq.y) && pos.at(sq.x, sq.y) == entry.reach().letter) {
            reach[static_cast<int>(owner)] = true;
          }
        }
      } else {
        Player owner = std::isupper(static_cast<unsigned char>(entry.count().letter))
                           ? Player::White
                           : Player::Black;
        std::int64_t count = 0;
        for (char c : pos.cells) {
          if (c == entry.count().letter) ++count;
        }
        if (count == entry.count().count) loss[static_cast<int>(owner)] = true;
      }
    }
    int m = static_cast<int>(mover);
    int o = static_cast<int>(opponent(mover));
    auto win_of = [](int who) {
      return who == 0 ? Outcome::WhiteWins : Outcome::BlackWins;
    };
    if (reach[m]) return {win_of(m), {}};
    if (reach[o]) return {win_of(o), {}};
    if (loss[m]) return {win_of(o), {}};
    if (loss[o]) return {win_of(m), {}};
  }
  if (state.half_moves_played == spec.goals.turnlimit) return {Outcome::Draw, {}};
  OracleVerdict verdict;
  verdict.moves = oracle_legal_moves(spec, state);
  if (verdict.moves.empty()) {
    verdict.outcome = state.to_move == Player::White ? Outcome::BlackWins
                                                     : Outcome::WhiteWins;
  }
  return verdict;
}

}  // namespace

std::uint64_t oracle_perft(const GameSpec& spec, const GameState& state, int depth) {
  if (depth <= 0) return 1;
  OracleVerdict verdict = oracle_adjudicate(spec, state);
  if (verdict.outcome != Outcome::Ongoing) return 0;
  std::uint64_t total = 0;
  for (const Move& m : verdict.moves) {
    GameState next = state;
    if (m.to != m.from) {
      next.position.set(m.to.x, m.to.y, next.position.at(m.from.x, m.from.y));
      next.position.set(m.from.x, m.from.y, '.');
    }
    next.to_move = opponent(state.to_move);
    next.half_moves_played = state.half_moves_played + 1;
    total += oracle_perft(spec, next, depth - 1);
  }
  return total;
}

}  // namespace sbg::testing
