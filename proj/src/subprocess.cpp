#include "gbcert/subprocess.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <cstring>
#include <tuple>
#include <utility>

#include "gbcert/errors.hpp"

namespace gbcert {

namespace {

class Fd {
 public:
  Fd() = default;
  explicit Fd(int fd) : fd_(fd) {}
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  Fd(Fd&& o) noexcept : fd_(std::exchange(o.fd_, -1)) {}
  Fd& operator=(Fd&& o) noexcept {
    reset();
    fd_ = std::exchange(o.fd_, -1);
    return *this;
  }
  ~Fd() { reset(); }

  int get() const { return fd_; }
  void reset() {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

 private:
  int fd_ = -1;
};

[[noreturn]] void spawn_failure(const char* what) {
  throw Error(Errc::OracleSpawnFailure, std::string(what) + ": " + std::strerror(errno));
}

void make_pipe(Fd& read_end, Fd& write_end) {
  std::array<int, 2> fds{};
  if (::pipe2(fds.data(), O_CLOEXEC) != 0) spawn_failure("pipe2");
  read_end = Fd(fds[0]);
  write_end = Fd(fds[1]);
}

void set_nonblocking(int fd) { ::fcntl(fd, F_SETFL, ::fcntl(fd, F_GETFL) | O_NONBLOCK); }

}  // namespace

ProcessResult run_process(const std::string& command, const std::string& input,
                          std::chrono::milliseconds timeout) {
  // stdin is a socket so that writes can use MSG_NOSIGNAL: a child that exits
  // without reading must not raise SIGPIPE in this process.
  std::array<int, 2> sv{};
  if (::socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, sv.data()) != 0) spawn_failure("socketpair");
  Fd in_parent(sv[0]);
  Fd in_child(sv[1]);
  Fd out_read, out_write, err_read, err_write;
  make_pipe(out_read, out_write);
  make_pipe(err_read, err_write);

  pid_t pid = ::fork();
  if (pid < 0) spawn_failure("fork");
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(in_child.get(), STDIN_FILENO);
    ::dup2(out_write.get(), STDOUT_FILENO);
    ::dup2(err_write.get(), STDERR_FILENO);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  in_child.reset();
  out_write.reset();
  err_write.reset();
  ::shutdown(in_parent.get(), SHUT_RD);
  set_nonblocking(in_parent.get());
  set_nonblocking(out_read.get());
  set_nonblocking(err_read.get());

  ProcessResult result;
  std::size_t written = 0;
  if (input.empty()) in_parent.reset();
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  std::array<char, 65536> buf{};

  while (out_read.get() >= 0 || err_read.get() >= 0) {
    auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (remaining.count() <= 0) {
      result.timed_out = true;
      break;
    }
    std::array<pollfd, 3> fds{{{in_parent.get(), POLLOUT, 0},
                               {out_read.get(), POLLIN, 0},
                               {err_read.get(), POLLIN, 0}}};
    int ready = ::poll(fds.data(), fds.size(), static_cast<int>(remaining.count()));
    if (ready < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (in_parent.get() >= 0 && (fds[0].revents & (POLLOUT | POLLERR | POLLHUP))) {
      ssize_t n = ::send(in_parent.get(), input.data() + written, input.size() - written, MSG_NOSIGNAL);
      if (n > 0) written += static_cast<std::size_t>(n);
      if (n < 0 && errno != EAGAIN && errno != EINTR) written = input.size();
      if (written >= input.size()) in_parent.reset();
    }
    for (auto [idx, fd, sink] : {std::tuple{1, &out_read, &result.out}, std::tuple{2, &err_read, &result.err}}) {
      if (fd->get() < 0 || !(fds[idx].revents & (POLLIN | POLLHUP | POLLERR))) continue;
      ssize_t n = ::read(fd->get(), buf.data(), buf.size());
      if (n > 0) {
        sink->append(buf.data(), static_cast<std::size_t>(n));
      } else if (n == 0 || (errno != EAGAIN && errno != EINTR)) {
        fd->reset();
      }
    }
  }

  // The child may close its output streams and keep running, so reaping is
  // bounded by the same deadline.
  int status = 0;
  bool reaped = false;
  while (!result.timed_out) {
    pid_t r = ::waitpid(pid, &status, WNOHANG);
    if (r == pid || (r < 0 && errno != EINTR)) {
      reaped = r == pid;
      break;
    }
    if (std::chrono::steady_clock::now() >= deadline) {
      result.timed_out = true;
      break;
    }
    ::usleep(2000);
  }
  if (!reaped) {
    ::kill(-pid, SIGKILL);
    while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
    }
  }
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  } else if (WIFSIGNALED(status)) {
    result.exit_code = 128 + WTERMSIG(status);
  }
  return result;
}

}  // namespace gbcert
