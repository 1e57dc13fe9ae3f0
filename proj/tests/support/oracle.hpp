#pragma once

// Independent reference implementations used to check the engine. These
// deliberately avoid the compiled-automaton code path: destinations are
// found either by recursive word enumeration with prefix pruning or by
// composing boolean square-to-square relations.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "sbg/ast.hpp"
#include "sbg/automaton.hpp"
#include "sbg/engine.hpp"

namespace sbg::testing {

class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Upper bound on the states a Thompson construction of `e` would use,
// computed from the expression alone.
std::size_t thompson_state_bound(const RegExpr& e);

// All words of the language, for star-free expressions. Power is expanded
// literally, so keep the inputs small.
std::set<Word> expand_language(const RegExpr& e);

// Word-by-word applicability: every prefix square must be on the board
// with matching content.
bool word_applicable(const Word& w, const OccupancyView& view, Coord from);
Coord word_endpoint(const Word& w, Coord from);

// Enumerates the language recursively, pruning any prefix that steps off
// the board or mismatches a content condition (no extension of such a
// prefix can apply). Star iterations are cut off once a word would exceed
// max_len. Throws OracleBudgetExceeded after `budget` enumeration steps.
std::vector<Coord> enum_destinations(const RegExpr& e, const OccupancyView& view,
                                     Coord from, std::size_t max_len,
                                     std::size_t budget = 2'000'000);

// Exact destinations via relation composition over board squares: a letter
// denotes a one-step relation, concatenation composes, sum unions, star
// takes the reflexive-transitive closure. Always terminates.
std::vector<Coord> relation_destinations(const RegExpr& e, const OccupancyView& view,
                                         int width, int height, Coord from);

// Reference move generation built on the enumeration oracle. The black
// orientation (negate both displacements) is re-derived here.
std::vector<Move> oracle_legal_moves(const GameSpec& spec, const GameState& state);

// Same, via the relation oracle.
std::vector<Move> relation_legal_moves(const GameSpec& spec, const GameState& state);

// Fully independent perft: oracle movegen, plain board surgery, and a
// straight transcription of the adjudication order.
std::uint64_t oracle_perft(const GameSpec& spec, const GameState& state, int depth);

}  // namespace sbg::testing
