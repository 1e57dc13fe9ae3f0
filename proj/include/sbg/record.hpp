#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbg/engine.hpp"

namespace sbg {

// A finished (or forfeited) game. Text layout:
//   game: <name>
//   1. x1 y1 x2 y2
//   ...
//   result: <white|black|draw> (<reason>)
struct GameRecord {
  std::string game_name;
  std::vector<Move> moves;
  Outcome result = Outcome::Draw;
  std::string reason;  // reach | piececount | nomoves | turnlimit | agent-fault

  std::string to_text() const;
  static std::optional<GameRecord> parse(std::string_view text);
};

// Replays the record from the initial state. For rule-terminated records
// the final adjudication must reproduce the recorded result and reason;
// an agent-fault record must replay to a still-ongoing game.
bool verify_replay(const GameRecord& record, const Game& game);

// Plays uniformly random legal moves until the game ends. Deterministic
// for a fixed seed.
GameRecord random_playout(const Game& game, std::uint64_t seed);

}  // namespace sbg
