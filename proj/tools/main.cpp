#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sbg/automaton.hpp"
#include "sbg/engine.hpp"
#include "sbg/parse.hpp"
#include "sbg/print.hpp"
#include "sbg/record.hpp"
#include "sbg/validate.hpp"

#include "agent.hpp"
#include "referee.hpp"

namespace {

using namespace sbg;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Parses and validates; prints every diagnostic to stderr. Returns the
// spec only when it is playable (no error-severity diagnostics).
std::optional<GameSpec> load_game(const std::string& path, int& status) {
  std::optional<std::string> text = read_file(path);
  if (!text) {
    std::cerr << "error: cannot read " << path << "\n";
    status = 2;
    return std::nullopt;
  }
  ParseResult result = parse(*text);
  for (const Diagnostic& d : result.diagnostics) {
    std::cerr << render(d, path) << "\n";
  }
  if (!result.ok()) {
    status = 1;
    return std::nullopt;
  }
  std::vector<Diagnostic> diags = validate(*result.spec);
  for (const Diagnostic& d : diags) {
    std::cerr << render(d, path) << "\n";
  }
  if (has_errors(diags)) {
    status = 1;
    return std::nullopt;
  }
  status = 0;
  return std::move(result.spec);
}

int cmd_validate(const std::string& path) {
  int status = 0;
  load_game(path, status);
  return status;
}

// Replays a ';'-separated move list from the initial state.
std::optional<GameState> replay_moves(const Game& game, const std::string& list,
                                      int& status) {
  GameState state = game.initial_state();
  if (list.empty()) return state;
  std::istringstream in(list);
  std::string piece;
  std::size_t index = 0;
  while (std::getline(in, piece, ';')) {
    std::optional<Move> m = parse_move(piece);
    if (!m) {
      std::cerr << "illegal move at index " << index << ": malformed \"" << piece
                << "\"\n";
      status = 1;
      return std::nullopt;
    }
    if (game.outcome(state) != Outcome::Ongoing) {
      std::cerr << "illegal move at index " << index << ": game over\n";
      status = 1;
      return std::nullopt;
    }
    try {
      state = game.apply(state, *m);
    } catch (const IllegalMove& err) {
      std::cerr << "illegal move at index " << index << ": " << err.what() << "\n";
      status = 1;
      return std::nullopt;
    }
    ++index;
  }
  return state;
}

int cmd_moves(const std::string& path, const std::string& move_list) {
  int status = 0;
  std::optional<GameSpec> spec = load_game(path, status);
  if (!spec) return status;
  Game game(std::move(*spec));
  std::optional<GameState> state = replay_moves(game, move_list, status);
  if (!state) return status;
  Adjudication adj = game.adjudicate(*state);
  if (adj.outcome != Outcome::Ongoing) {
    std::cerr << "game over: " << outcome_text(adj.outcome) << "\n";
    return 1;
  }
  for (const Move& m : adj.moves) {
    std::cout << to_string(m) << "\n";
  }
  return 0;
}

int cmd_perft(const std::string& path, int depth) {
  int status = 0;
  std::optional<GameSpec> spec = load_game(path, status);
  if (!spec) return status;
  Game game(std::move(*spec));
  GameState state = game.initial_state();
  for (int d = 0; d <= depth; ++d) {
    std::cout << d << " " << game.perft(state, d) << "\n";
  }
  return 0;
}

int cmd_playout(const std::string& path, std::uint64_t seed) {
  int status = 0;
  std::optional<GameSpec> spec = load_game(path, status);
  if (!spec) return status;
  Game game(std::move(*spec));
  std::cout << random_playout(game, seed).to_text();
  return 0;
}

// Why a move is not playable, with the missing-word case spelled out via
// the witness search.
std::string explain_illegal(const Game& game, const GameState& state, const Move& m) {
  const Position& pos = state.position;
  if (!pos.on_board(m.from.x, m.from.y) || !pos.on_board(m.to.x, m.to.y)) {
    return "move endpoints are off the board";
  }
  char c = pos.at(m.from.x, m.from.y);
  if (c == '.') return "no piece on the source square";
  bool white_piece = std::isupper(static_cast<unsigned char>(c)) != 0;
  if ((state.to_move == Player::White) != white_piece) {
    return "that piece belongs to the opponent";
  }
  char type = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  const MoveAutomaton* automaton = game.automaton_for(type, state.to_move);
  if (automaton == nullptr) {
    return std::string("piece '") + type + "' has no movement rule";
  }
  PositionView view(pos, state.to_move);
  if (!witness(*automaton, view, m.from, m.to)) {
    std::ostringstream out;
    out << "no accepted movement word of '" << type << "' applies from ("
        << m.from.x << "," << m.from.y << ") to (" << m.to.x << "," << m.to.y
        << ")";
    return out.str();
  }
  return "move is not legal here";
}

int cmd_play(const std::string& path, const std::string& human_color,
             std::uint64_t seed) {
  int status = 0;
  std::optional<GameSpec> spec = load_game(path, status);
  if (!spec) return status;
  Game game(std::move(*spec));
  Player human = human_color == "white" ? Player::White : Player::Black;
  std::mt19937_64 rng(seed);

  GameState state = game.initial_state();
  std::cout << render(state.position);
  while (true) {
    Adjudication adj = game.adjudicate(state);
    if (adj.outcome != Outcome::Ongoing) {
      std::cout << "result: " << result_word(adj.outcome) << " ("
                << to_string(adj.reason) << ")\n";
      return 0;
    }
    if (state.to_move == human) {
      std::cout << "move> " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) {
        std::cout << "aborted\n";
        return 1;
      }
      std::optional<Move> m = parse_move(line);
      if (!m) {
        std::cout << "malformed move (want \"x1 y1 x2 y2\")\n";
        continue;
      }
      if (!std::binary_search(adj.moves.begin(), adj.moves.end(), *m)) {
        std::cout << "illegal move: " << explain_illegal(game, state, *m) << "\n";
        continue;
      }
      const MoveAutomaton* automaton = game.automaton_for(
          static_cast<char>(std::toupper(static_cast<unsigned char>(
              state.position.at(m->from.x, m->from.y)))),
          state.to_move);
      PositionView view(state.position, state.to_move);
      std::optional<Word> word = witness(*automaton, view, m->from, m->to);
      std::cout << "you play " << to_string(*m);
      if (word && !word->empty()) std::cout << "  via " << to_string(*word);
      std::cout << "\n";
      state = game.apply(state, *m);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, adj.moves.size() - 1);
      Move m = adj.moves[pick(rng)];
      std::cout << "engine plays " << to_string(m) << "\n";
      state = game.apply(state, m);
    }
    std::cout << render(state.position);
  }
}

int cmd_match(const std::string& path, const sbg::cli::MatchOptions& options) {
  int status = 0;
  std::optional<GameSpec> spec = load_game(path, status);
  if (!spec) return status;
  Game game(std::move(*spec));
  return sbg::cli::run_match(game, options);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplified Boardgames toolkit: validate definitions, "
               "generate moves, run perft, play, and referee agent matches"};
  app.require_subcommand(1);

  std::string path;
  std::string move_list;
  int depth = 0;
  std::uint64_t seed = 0;
  std::string human_color = "white";
  sbg::cli::MatchOptions match_options;
  std::string misbehave = "none";

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Parse and check a game definition");
  validate_cmd->add_option("file", path, "game definition")->required();

  CLI::App* moves_cmd =
      app.add_subcommand("moves", "List legal moves, one \"x1 y1 x2 y2\" per line");
  moves_cmd->add_option("file", path, "game definition")->required();
  moves_cmd->add_option("--moves", move_list,
                        "';'-separated moves to replay first");

  CLI::App* perft_cmd =
      app.add_subcommand("perft", "Count move sequences up to a depth");
  perft_cmd->add_option("file", path, "game definition")->required();
  perft_cmd->add_option("depth", depth, "maximum depth in half-moves")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* playout_cmd =
      app.add_subcommand("playout", "Play uniformly random moves to the end");
  playout_cmd->add_option("file", path, "game definition")->required();
  playout_cmd->add_option("--seed", seed, "random seed (default 0)");

  CLI::App* play_cmd = app.add_subcommand("play", "Play interactively");
  play_cmd->add_option("file", path, "game definition")->required();
  play_cmd->add_option("--human", human_color, "side played by the human")
      ->check(CLI::IsMember({"white", "black"}))
      ->required();
  play_cmd->add_option("--seed", seed, "engine random seed");

  CLI::App* match_cmd =
      app.add_subcommand("match", "Referee a game between two agent processes");
  match_cmd->add_option("file", path, "game definition")->required();
  match_cmd->add_option("--white", match_options.white_command, "white agent command")
      ->required();
  match_cmd->add_option("--black", match_options.black_command, "black agent command")
      ->required();
  match_cmd->add_option("--time", match_options.time_ms,
                        "per-move reply budget in milliseconds");
  match_cmd->add_option("--log", match_options.log_path, "write the record here too");

  CLI::App* agent_cmd = app.add_subcommand(
      "agent", "Built-in random agent speaking the match protocol on stdio");
  agent_cmd->add_option("--seed", seed, "random seed");
  agent_cmd->add_option("--misbehave", misbehave, "fault injection for tests")
      ->check(CLI::IsMember({"none", "illegal", "garbage", "hang"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(path);
    if (*moves_cmd) return cmd_moves(path, move_list);
    if (*perft_cmd) return cmd_perft(path, depth);
    if (*playout_cmd) return cmd_playout(path, seed);
    if (*play_cmd) return cmd_play(path, human_color, seed);
    if (*match_cmd) return cmd_match(path, match_options);
    if (*agent_cmd) return sbg::cli::run_agent(seed, misbehave);
  } catch (const sbg::AutomatonTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
