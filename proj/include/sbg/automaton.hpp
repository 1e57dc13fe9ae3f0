#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sbg/ast.hpp"

namespace sbg {

// What a square holds, from the moving player's point of view.
enum class SquareContent : std::uint8_t { Empty, Opponent, Own, OffBoard };

// Read-only board oracle for destination search. Must answer consistently
// for the duration of a query (the board position is not changed while
// legal moves are computed).
class OccupancyView {
 public:
  virtual ~OccupancyView() = default;
  virtual SquareContent at(int x, int y) const = 0;
};

using StateId = std::uint32_t;
using Word = std::vector<MoveLetter>;

std::string to_string(const Word& w);  // "(1,1,e)(1,1,p)", "" for the empty word

// Thompson-style NFA over MoveLetter with explicit epsilon transitions.
struct MoveAutomaton {
  StateId state_count = 0;
  StateId start = 0;
  std::vector<bool> accepting;
  std::vector<std::vector<std::pair<MoveLetter, StateId>>> letter_edges;
  std::vector<std::vector<StateId>> eps_edges;
};

// Raised when expanding an expression would exceed the state budget
// (powers are expanded by copying, so nested exponents multiply).
class AutomatonTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thompson construction: Letter is a two-state fragment, Concat chains via
// epsilon, Sum forks/joins, Power(e, n) is n chained copies (n = 0 accepts
// only the empty word), Star adds loop-back and bypass.
MoveAutomaton compile(const RegExpr& expr);

bool accepts(const MoveAutomaton& automaton, const Word& w);

// All squares reachable from `from` by an accepted word whose every prefix
// stays on the board and matches its content condition. Breadth-first
// search over (automaton state, square) pairs; the product graph is finite
// even when the language is not. Result is sorted and duplicate-free.
std::vector<Coord> destinations(const MoveAutomaton& automaton,
                                const OccupancyView& view, Coord from);

// A shortest applicable accepted word ending at `to`, or nullopt when `to`
// is not a destination. Ties are broken lexicographically on (dx, dy, on)
// with e < p < w.
std::optional<Word> witness(const MoveAutomaton& automaton,
                            const OccupancyView& view, Coord from, Coord to);

}  // namespace sbg
