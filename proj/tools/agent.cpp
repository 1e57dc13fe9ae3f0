#include "agent.hpp"

#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "sbg/engine.hpp"
#include "sbg/parse.hpp"
#include "sbg/validate.hpp"

namespace sbg::cli {
namespace {

std::optional<GameSpec> read_handshake(Player& color) {
  std::string line;
  if (!std::getline(std::cin, line)) return std::nullopt;
  if (line == "sbg1 white") {
    color = Player::White;
  } else if (line == "sbg1 black") {
    color = Player::Black;
  } else {
    return std::nullopt;
  }

  std::ostringstream definition;
  while (std::getline(std::cin, line)) {
    if (line == ".") {
      ParseResult result = parse(definition.str());
      if (!result.ok() || has_errors(validate(*result.spec))) return std::nullopt;
      return std::move(result.spec);
    }
    definition << line << '\n';
  }
  return std::nullopt;
}

}  // namespace

int run_agent(std::uint64_t seed, const std::string& misbehave) {
  Player color = Player::White;
  std::optional<GameSpec> spec = read_handshake(color);
  if (!spec) {
    std::cerr << "agent: bad handshake\n";
    return 1;
  }

  Game game(std::move(*spec));
  GameState state = game.initial_state();
  std::mt19937_64 rng(seed);
  bool faulted = false;  // after a deliberate bad reply, just drain input

  auto reply_with_move = [&] {
    if (misbehave == "illegal") {
      std::cout << "move 9999 9999 9999 9999\n" << std::flush;
      faulted = true;
      return;
    }
    if (misbehave == "garbage") {
      std::cout << "xyzzy\n" << std::flush;
      faulted = true;
      return;
    }
    if (misbehave == "hang") {
      std::this_thread::sleep_for(std::chrono::hours(1));
      return;
    }
    Adjudication adj = game.adjudicate(state);
    if (adj.outcome != Outcome::Ongoing) return;  // referee will conclude
    std::uniform_int_distribution<std::size_t> pick(0, adj.moves.size() - 1);
    Move m = adj.moves[pick(rng)];
    state = game.apply(state, m);
    std::cout << "move " << to_string(m) << "\n" << std::flush;
  };

  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.starts_with("result ")) return 0;
    if (faulted) continue;
    if (line == "start") {
      reply_with_move();
    } else if (line.starts_with("move ")) {
      std::optional<Move> m = parse_move(line.substr(5));
      if (!m) {
        std::cerr << "agent: malformed move from referee\n";
        return 1;
      }
      try {
        state = game.apply(state, *m);
      } catch (const IllegalMove& err) {
        std::cerr << "agent: illegal move from referee: " << err.what() << "\n";
        return 1;
      }
      if (game.outcome(state) == Outcome::Ongoing) reply_with_move();
    } else {
      std::cerr << "agent: unexpected line \"" << line << "\"\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace sbg::cli
