#pragma once

#include <cstdint>
#include <string>

namespace sbg::cli {

// Built-in random agent speaking the referee protocol on stdin/stdout.
// `misbehave` is for referee tests: "illegal" answers an impossible move,
// "garbage" answers a malformed line, "hang" never answers.
int run_agent(std::uint64_t seed, const std::string& misbehave);

}  // namespace sbg::cli
