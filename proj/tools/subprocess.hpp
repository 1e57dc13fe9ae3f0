#pragma once

#include <optional>
#include <string>

namespace sbg::cli {

// One agent process driven over its standard streams. Line-oriented:
// writes flush immediately, reads honor a per-call deadline.
class AgentSession {
 public:
  AgentSession() = default;
  ~AgentSession() { shutdown(); }

  AgentSession(const AgentSession&) = delete;
  AgentSession& operator=(const AgentSession&) = delete;

  // Runs `command` through the shell with stdin/stdout piped to us.
  // Returns false if the process machinery itself fails.
  bool spawn(const std::string& command);

  bool alive() const { return pid_ > 0; }

  // False on a broken pipe (agent gone).
  bool send_line(const std::string& line);

  // Next full line without its newline, or nullopt if the deadline passes
  // or the stream ends first.
  std::optional<std::string> read_line(int timeout_ms);

  // Closes streams, terminates the child if needed, reaps it.
  void shutdown();

 private:
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

}  // namespace sbg::cli
