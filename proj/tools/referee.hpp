#pragma once

#include <string>

#include "sbg/engine.hpp"

namespace sbg::cli {

struct MatchOptions {
  std::string white_command;
  std::string black_command;
  int time_ms = 5000;     // per-move reply budget
  std::string log_path;   // empty = no log file
};

// Plays one game between two agent processes, printing the record to
// stdout (and to the log file when given). Returns the process exit
// status: 0 when a result was produced, 2 when an agent failed to spawn.
int run_match(const Game& game, const MatchOptions& options);

}  // namespace sbg::cli
