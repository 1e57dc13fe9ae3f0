#include "sbg/engine.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace sbg {
namespace {

MoveAutomaton orient_automaton(MoveAutomaton a, Player mover) {
  for (auto& edges : a.letter_edges) {
    for (auto& [letter, target] : edges) {
      letter = oriented_letter(letter, mover);
    }
  }
  return a;
}

}  // namespace

Player opponent(Player p) {
  return p == Player::White ? Player::Black : Player::White;
}

std::string to_string(Player p) {
  return p == Player::White ? "white" : "black";
}

Position initial_position(const BoardDecl& board) {
  Position pos;
  pos.width = board.width;
  pos.height = board.height;
  pos.cells.assign(static_cast<std::size_t>(board.width) * board.height, '.');
  for (int y = 0; y < board.height; ++y) {
    const std::string& row = board.rows[board.height - 1 - y];
    for (int x = 0; x < board.width; ++x) {
      pos.set(x, y, row[x]);
    }
  }
  return pos;
}

std::string render(const Position& pos) {
  std::ostringstream out;
  for (int y = pos.height - 1; y >= 0; --y) {
    out << '|';
    for (int x = 0; x < pos.width; ++x) out << pos.at(x, y);
    out << "|\n";
  }
  return out.str();
}

SquareContent content_for(const Position& pos, Player mover, int x, int y) {
  if (!pos.on_board(x, y)) return SquareContent::OffBoard;
  char c = pos.at(x, y);
  if (c == '.') return SquareContent::Empty;
  bool white_piece = std::isupper(static_cast<unsigned char>(c));
  bool own = (mover == Player::White) == white_piece;
  return own ? SquareContent::Own : SquareContent::Opponent;
}

MoveLetter oriented_letter(const MoveLetter& l, Player mover) {
  if (mover == Player::White) return l;
  return MoveLetter{-l.dx, -l.dy, l.on};
}

std::string to_string(const Move& m) {
  std::ostringstream out;
  out << m.from.x << ' ' << m.from.y << ' ' << m.to.x << ' ' << m.to.y;
  return out.str();
}

std::optional<Move> parse_move(std::string_view text) {
  std::istringstream in{std::string(text)};
  int x1, y1, x2, y2;
  if (!(in >> x1 >> y1 >> x2 >> y2)) return std::nullopt;
  std::string rest;
  if (in >> rest) return std::nullopt;  // trailing garbage
  return Move{{x1, y1}, {x2, y2}};
}

std::string to_string(TerminationReason r) {
  switch (r) {
    case TerminationReason::None: return "none";
    case TerminationReason::Reach: return "reach";
    case TerminationReason::PieceCount: return "piececount";
    case TerminationReason::NoMoves: return "nomoves";
    case TerminationReason::TurnLimit: return "turnlimit";
  }
  return "?";
}

std::string result_word(Outcome o) {
  switch (o) {
    case Outcome::WhiteWins: return "white";
    case Outcome::BlackWins: return "black";
    case Outcome::Draw: return "draw";
    case Outcome::Ongoing: return "ongoing";
  }
  return "?";
}

std::string outcome_text(Outcome o) {
  switch (o) {
    case Outcome::WhiteWins: return "white wins";
    case Outcome::BlackWins: return "black wins";
    case Outcome::Draw: return "draw";
    case Outcome::Ongoing: return "ongoing";
  }
  return "?";
}

Game::Game(GameSpec spec) : spec_(std::move(spec)) {
  if (static_cast<int>(spec_.board.rows.size()) != spec_.board.height ||
      spec_.board.width <= 0 || spec_.board.height <= 0) {
    throw std::invalid_argument("game spec has an invalid board; run validate first");
  }
  for (const std::string& row : spec_.board.rows) {
    if (static_cast<int>(row.size()) != spec_.board.width) {
      throw std::invalid_argument("game spec has an invalid board; run validate first");
    }
  }
  for (const PieceRule& rule : spec_.piece_rules) {
    MoveAutomaton white = compile(rule.movement);
    MoveAutomaton black = orient_automaton(white, Player::Black);
    automata_.emplace(rule.letter,
                      std::array<MoveAutomaton, 2>{std::move(white), std::move(black)});
  }
}

GameState Game::initial_state() const {
  return GameState{initial_position(spec_.board), Player::White, 0};
}

const MoveAutomaton* Game::automaton_for(char type_letter, Player mover) const {
  auto it = automata_.find(type_letter);
  if (it == automata_.end()) return nullptr;
  return &it->second[mover == Player::White ? 0 : 1];
}

std::vector<Move> Game::legal_moves(const GameState& state) const {
  std::vector<Move> moves;
  const Position& pos = state.position;
  PositionView view(pos, state.to_move);
  for (int x = 0; x < pos.width; ++x) {
    for (int y = 0; y < pos.height; ++y) {
      char c = pos.at(x, y);
      if (c == '.') continue;
      bool white_piece = std::isupper(static_cast<unsigned char>(c));
      if ((state.to_move == Player::White) != white_piece) continue;
      char type = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      const MoveAutomaton* automaton = automaton_for(type, state.to_move);
      if (automaton == nullptr) continue;
      for (Coord to : destinations(*automaton, view, {x, y})) {
        moves.push_back(Move{{x, y}, to});
      }
    }
  }
  std::sort(moves.begin(), moves.end());
  return moves;
}

GameState Game::apply_unchecked(const GameState& state, const Move& m) const {
  GameState next = state;
  if (m.to != m.from) {
    char c = next.position.at(m.from.x, m.from.y);
    next.position.set(m.to.x, m.to.y, c);
    next.position.set(m.from.x, m.from.y, '.');
  }
  next.to_move = opponent(state.to_move);
  next.half_moves_played = state.half_moves_played + 1;
  return next;
}

GameState Game::apply(const GameState& state, const Move& m) const {
  const Position& pos = state.position;
  if (!pos.on_board(m.from.x, m.from.y) || !pos.on_board(m.to.x, m.to.y)) {
    throw IllegalMove("move endpoints are off the board");
  }
  char c = pos.at(m.from.x, m.from.y);
  if (c == '.') throw IllegalMove("no piece on the source square");
  bool white_piece = std::isupper(static_cast<unsigned char>(c));
  if ((state.to_move == Player::White) != white_piece) {
    throw IllegalMove("the piece on the source square belongs to the opponent");
  }
  char type = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  const MoveAutomaton* automaton = automaton_for(type, state.to_move);
  if (automaton == nullptr) {
    throw IllegalMove(std::string("piece '") + type + "' has no movement rule");
  }
  PositionView view(pos, state.to_move);
  std::vector<Coord> dests = destinations(*automaton, view, m.from);
  if (!std::binary_search(dests.begin(), dests.end(), m.to)) {
    throw IllegalMove("no applicable movement word reaches the destination");
  }
  return apply_unchecked(state, m);
}

Adjudication Game::adjudicate(const GameState& state) const {
  Adjudication adj;

  // Goals are evaluated only once at least one half-move was made; the
  // mover's reach win takes precedence over everything else, including a
  // piece-count loss the same move inflicted on the mover.
  if (state.half_moves_played > 0) {
    Player mover = opponent(state.to_move);
    bool reach_win[2] = {false, false};
    bool count_loss[2] = {false, false};
    for (const GoalEntry& entry : spec_.goals.entries) {
      if (entry.is_reach()) {
        const ReachGoal& goal = entry.reach();
        Player owner = std::isupper(static_cast<unsigned char>(goal.letter))
                           ? Player::White
                           : Player::Black;
        for (const Coord& sq : goal.squares) {
          if (state.position.on_board(sq.x, sq.y) &&
              state.position.at(sq.x, sq.y) == goal.letter) {
            reach_win[static_cast<int>(owner)] = true;
            break;
          }
        }
      } else {
        const CountGoal& goal = entry.count();
        Player owner = std::isupper(static_cast<unsigned char>(goal.letter))
                           ? Player::White
                           : Player::Black;
        std::int64_t n = std::count(state.position.cells.begin(),
                                    state.position.cells.end(), goal.letter);
        if (n == goal.count) count_loss[static_cast<int>(owner)] = true;
      }
    }
    auto wins = [](Player p) {
      return p == Player::White ? Outcome::WhiteWins : Outcome::BlackWins;
    };
    if (reach_win[static_cast<int>(mover)]) {
      adj.outcome = wins(mover);
      adj.reason = TerminationReason::Reach;
      return adj;
    }
    if (reach_win[static_cast<int>(opponent(mover))]) {
      adj.outcome = wins(opponent(mover));
      adj.reason = TerminationReason::Reach;
      return adj;
    }
    if (count_loss[static_cast<int>(mover)]) {
      adj.outcome = wins(opponent(mover));
      adj.reason = TerminationReason::PieceCount;
      return adj;
    }
    if (count_loss[static_cast<int>(opponent(mover))]) {
      adj.outcome = wins(mover);
      adj.reason = TerminationReason::PieceCount;
      return adj;
    }
  }

  if (state.half_moves_played == spec_.goals.turnlimit) {
    adj.outcome = Outcome::Draw;
    adj.reason = TerminationReason::TurnLimit;
    return adj;
  }

  adj.moves = legal_moves(state);
  if (adj.moves.empty()) {
    adj.outcome = state.to_move == Player::White ? Outcome::BlackWins
                                                 : Outcome::WhiteWins;
    adj.reason = TerminationReason::NoMoves;
    return adj;
  }
  return adj;
}

Outcome Game::outcome(const GameState& state) const {
  return adjudicate(state).outcome;
}

std::uint64_t Game::perft(const GameState& state, int depth) const {
  if (depth <= 0) return 1;
  Adjudication adj = adjudicate(state);
  if (adj.outcome != Outcome::Ongoing) return 0;
  std::uint64_t total = 0;
  for (const Move& m : adj.moves) {
    total += perft(apply_unchecked(state, m), depth - 1);
  }
  return total;
}

}  // namespace sbg
