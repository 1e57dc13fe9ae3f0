#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sbg/ast.hpp"
#include "sbg/automaton.hpp"

namespace sbg {

enum class Player : std::uint8_t { White, Black };

Player opponent(Player p);
std::string to_string(Player p);  // "white" / "black"

using Square = Coord;

// Board contents. Cells hold '.' for empty, an uppercase letter for a
// white piece and a lowercase letter for a black piece. Row y = 0 is the
// bottom of the board.
struct Position {
  int width = 0;
  int height = 0;
  std::string cells;

  char at(int x, int y) const { return cells[static_cast<std::size_t>(y) * width + x]; }
  void set(int x, int y, char c) { cells[static_cast<std::size_t>(y) * width + x] = c; }
  bool on_board(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }

  bool operator==(const Position&) const = default;
};

// Builds the initial position: the first declared row is the top of the
// board (y = height - 1), the last is white's side (y = 0).
Position initial_position(const BoardDecl& board);

// Board row format, top row first, one "|...|" line per row.
std::string render(const Position& pos);

SquareContent content_for(const Position& pos, Player mover, int x, int y);

// White keeps letters as written; for black both displacements are negated
// (a 180-degree rotation, so the two players' geometries are congruent).
MoveLetter oriented_letter(const MoveLetter& l, Player mover);

struct Move {
  Square from;
  Square to;

  friend auto operator<=>(const Move&, const Move&) = default;
};

std::string to_string(const Move& m);                  // "x1 y1 x2 y2"
std::optional<Move> parse_move(std::string_view text);

enum class Outcome : std::uint8_t { Ongoing, WhiteWins, BlackWins, Draw };
enum class TerminationReason : std::uint8_t { None, Reach, PieceCount, NoMoves, TurnLimit };

std::string to_string(TerminationReason r);
std::string result_word(Outcome o);   // "white" / "black" / "draw"
std::string outcome_text(Outcome o);  // "white wins" / "black wins" / "draw" / "ongoing"

struct GameState {
  Position position;
  Player to_move = Player::White;
  std::int64_t half_moves_played = 0;

  bool operator==(const GameState&) const = default;
};

// Outcome plus the legal moves of the side to move (filled only when the
// game is ongoing; movegen is skipped once a goal or the turnlimit fired).
struct Adjudication {
  Outcome outcome = Outcome::Ongoing;
  TerminationReason reason = TerminationReason::None;
  std::vector<Move> moves;
};

class IllegalMove : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Binds a validated spec to its compiled movement automata and implements
// move generation, move application and terminal adjudication.
class Game {
 public:
  // The spec must be free of validation errors.
  explicit Game(GameSpec spec);

  const GameSpec& spec() const { return spec_; }

  GameState initial_state() const;

  // One move per reachable (from, to) pair for every piece of the side to
  // move that has a movement rule. Sorted by (x1, y1, x2, y2). A piece
  // whose language contains an applicable empty word yields a
  // pass-in-place move (from == to).
  std::vector<Move> legal_moves(const GameState& state) const;

  // Throws IllegalMove unless m is generated for this state. Capturing is
  // by replacement, own pieces included; a from == to move leaves the
  // board unchanged. Counters always advance.
  GameState apply(const GameState& state, const Move& m) const;

  Outcome outcome(const GameState& state) const;
  Adjudication adjudicate(const GameState& state) const;

  // Number of move sequences of exactly `depth` half-moves; terminal
  // states contribute nothing below themselves.
  std::uint64_t perft(const GameState& state, int depth) const;

  // Compiled automaton for a piece type as seen by `mover`, or nullptr if
  // the type has no movement rule.
  const MoveAutomaton* automaton_for(char type_letter, Player mover) const;

 private:
  GameState apply_unchecked(const GameState& state, const Move& m) const;

  GameSpec spec_;
  std::map<char, std::array<MoveAutomaton, 2>> automata_;  // [White, Black]
};

// OccupancyView over a concrete position from one player's perspective.
class PositionView final : public OccupancyView {
 public:
  PositionView(const Position& pos, Player mover) : pos_(pos), mover_(mover) {}

  SquareContent at(int x, int y) const override {
    return content_for(pos_, mover_, x, y);
  }

 private:
  const Position& pos_;
  Player mover_;
};

}  // namespace sbg
