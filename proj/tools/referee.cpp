#include "referee.hpp"

#include <algorithm>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sbg/print.hpp"
#include "sbg/record.hpp"
#include "subprocess.hpp"

namespace sbg::cli {
namespace {

// The definition block is framed by a "." sentinel line; the canonical
// pretty-printed form can never produce one.
void send_preamble(AgentSession& session, Player color, const std::string& definition) {
  session.send_line("sbg1 " + to_string(color));
  std::istringstream lines(definition);
  std::string line;
  while (std::getline(lines, line)) session.send_line(line);
  session.send_line(".");
}

}  // namespace

int run_match(const Game& game, const MatchOptions& options) {
  signal(SIGPIPE, SIG_IGN);  // a dead agent must not kill the referee

  AgentSession sessions[2];
  if (!sessions[0].spawn(options.white_command) ||
      !sessions[1].spawn(options.black_command)) {
    std::cerr << "error: failed to spawn agent process\n";
    return 2;
  }

  std::string definition = pretty_print(game.spec());
  send_preamble(sessions[0], Player::White, definition);
  send_preamble(sessions[1], Player::Black, definition);

  GameRecord record;
  record.game_name = game.spec().name;

  GameState state = game.initial_state();
  std::string last_move;

  while (true) {
    Adjudication adj = game.adjudicate(state);
    if (adj.outcome != Outcome::Ongoing) {
      record.result = adj.outcome;
      record.reason = to_string(adj.reason);
      break;
    }

    AgentSession& mover = sessions[state.to_move == Player::White ? 0 : 1];
    mover.send_line(last_move.empty() ? "start" : "move " + last_move);

    std::optional<std::string> reply = mover.read_line(options.time_ms);
    std::optional<Move> move;
    if (reply && reply->starts_with("move ")) {
      move = parse_move(reply->substr(5));
    }
    bool legal = move && std::binary_search(adj.moves.begin(), adj.moves.end(), *move);
    if (!legal) {
      Player winner = opponent(state.to_move);
      record.result = winner == Player::White ? Outcome::WhiteWins : Outcome::BlackWins;
      record.reason = "agent-fault";
      std::cerr << "agent-fault: " << to_string(state.to_move)
                << (reply ? " replied \"" + *reply + "\"" : " did not reply in time")
                << "\n";
      break;
    }

    state = game.apply(state, *move);
    record.moves.push_back(*move);
    last_move = to_string(*move);
  }

  std::string verdict = "result " + result_word(record.result);
  for (AgentSession& session : sessions) {
    session.send_line(verdict);
    session.shutdown();
  }

  std::string text = record.to_text();
  std::cout << text;
  if (!options.log_path.empty()) {
    std::ofstream log(options.log_path, std::ios::binary);
    if (!log) {
      std::cerr << "error: cannot write log file " << options.log_path << "\n";
      return 2;
    }
    log << text;
  }
  return 0;
}

}  // namespace sbg::cli
