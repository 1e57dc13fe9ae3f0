#include "sbg/record.hpp"

#include <random>
#include <sstream>

namespace sbg {

std::string GameRecord::to_text() const {
  std::ostringstream out;
  out << "game: " << game_name << '\n';
  for (std::size_t i = 0; i < moves.size(); ++i) {
    out << (i + 1) << ". " << to_string(moves[i]) << '\n';
  }
  out << "result: " << result_word(result) << " (" << reason << ")\n";
  return out.str();
}

std::optional<GameRecord> GameRecord::parse(std::string_view text) {
  GameRecord record;
  std::istringstream in{std::string(text)};
  std::string line;

  if (!std::getline(in, line) || !line.starts_with("game: ")) return std::nullopt;
  record.game_name = line.substr(6);

  bool saw_result = false;
  std::size_t expected_index = 1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.starts_with("result: ")) {
      std::string rest = line.substr(8);
      auto paren = rest.find(" (");
      if (paren == std::string::npos || !rest.ends_with(')')) return std::nullopt;
      std::string who = rest.substr(0, paren);
      record.reason = rest.substr(paren + 2, rest.size() - paren - 3);
      if (who == "white") record.result = Outcome::WhiteWins;
      else if (who == "black") record.result = Outcome::BlackWins;
      else if (who == "draw") record.result = Outcome::Draw;
      else return std::nullopt;
      saw_result = true;
      break;
    }
    auto dot = line.find(". ");
    if (dot == std::string::npos) return std::nullopt;
    if (line.substr(0, dot) != std::to_string(expected_index)) return std::nullopt;
    ++expected_index;
    std::optional<Move> m = parse_move(line.substr(dot + 2));
    if (!m) return std::nullopt;
    record.moves.push_back(*m);
  }
  if (!saw_result) return std::nullopt;
  return record;
}

bool verify_replay(const GameRecord& record, const Game& game) {
  GameState state = game.initial_state();
  for (const Move& m : record.moves) {
    if (game.outcome(state) != Outcome::Ongoing) return false;
    try {
      state = game.apply(state, m);
    } catch (const IllegalMove&) {
      return false;
    }
  }
  Adjudication adj = game.adjudicate(state);
  if (record.reason == "agent-fault") {
    // The forfeit cut the game short; the replayed moves themselves must
    // still leave a live position.
    return adj.outcome == Outcome::Ongoing;
  }
  return adj.outcome == record.result && to_string(adj.reason) == record.reason;
}

GameRecord random_playout(const Game& game, std::uint64_t seed) {
  GameRecord record;
  record.game_name = game.spec().name;
  std::mt19937_64 rng(seed);

  GameState state = game.initial_state();
  while (true) {
    Adjudication adj = game.adjudicate(state);
    if (adj.outcome != Outcome::Ongoing) {
      record.result = adj.outcome;
      record.reason = to_string(adj.reason);
      return record;
    }
    std::uniform_int_distribution<std::size_t> pick(0, adj.moves.size() - 1);
    const Move& m = adj.moves[pick(rng)];
    record.moves.push_back(m);
    state = game.apply(state, m);
  }
}

}  // namespace sbg
