#include "subprocess.hpp"

#include <csignal>
#include <cstring>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>

namespace sbg::cli {

bool AgentSession::spawn(const std::string& command) {
  int to_pipe[2];
  int from_pipe[2];
  if (pipe(to_pipe) != 0) return false;
  if (pipe(from_pipe) != 0) {
    close(to_pipe[0]);
    close(to_pipe[1]);
    return false;
  }

  pid_t pid = fork();
  if (pid < 0) {
    close(to_pipe[0]);
    close(to_pipe[1]);
    close(from_pipe[0]);
    close(from_pipe[1]);
    return false;
  }
  if (pid == 0) {
    // Own process group, so shutdown() can kill the shell and whatever it
    // spawned in one go.
    setpgid(0, 0);
    dup2(to_pipe[0], STDIN_FILENO);
    dup2(from_pipe[1], STDOUT_FILENO);
    close(to_pipe[0]);
    close(to_pipe[1]);
    close(from_pipe[0]);
    close(from_pipe[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }

  setpgid(pid, pid);  // mirror the child's call; either side may win the race
  close(to_pipe[0]);
  close(from_pipe[1]);
  pid_ = pid;
  to_child_ = to_pipe[1];
  from_child_ = from_pipe[0];
  return true;
}

bool AgentSession::send_line(const std::string& line) {
  if (to_child_ < 0) return false;
  std::string data = line + "\n";
  std::size_t written = 0;
  while (written < data.size()) {
    ssize_t n = write(to_child_, data.data() + written, data.size() - written);
    if (n <= 0) return false;
    written += static_cast<std::size_t>(n);
  }
  return true;
}

std::optional<std::string> AgentSession::read_line(int timeout_ms) {
  if (from_child_ < 0) return std::nullopt;
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::milliseconds(timeout_ms);
  while (true) {
    auto newline = buffer_.find('\n');
    if (newline != std::string::npos) {
      std::string line = buffer_.substr(0, newline);
      buffer_.erase(0, newline + 1);
      return line;
    }

    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                    deadline - std::chrono::steady_clock::now())
                    .count();
    if (left < 0) return std::nullopt;

    pollfd pfd{from_child_, POLLIN, 0};
    int ready = poll(&pfd, 1, static_cast<int>(left));
    if (ready <= 0) return std::nullopt;  // timeout or poll failure

    char chunk[4096];
    ssize_t n = read(from_child_, chunk, sizeof chunk);
    if (n <= 0) return std::nullopt;  // stream closed
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

void AgentSession::shutdown() {
  if (to_child_ >= 0) {
    close(to_child_);
    to_child_ = -1;
  }
  if (from_child_ >= 0) {
    close(from_child_);
    from_child_ = -1;
  }
  if (pid_ > 0) {
    int status = 0;
    // Give the agent a moment to exit on its own after the streams close.
    for (int i = 0; i < 20; ++i) {
      pid_t done = waitpid(pid_, &status, WNOHANG);
      if (done == pid_) {
        pid_ = -1;
        return;
      }
      usleep(10'000);
    }
    kill(-pid_, SIGKILL);  // the whole process group
    kill(pid_, SIGKILL);
    waitpid(pid_, &status, 0);
    pid_ = -1;
  }
}

}  // namespace sbg::cli
