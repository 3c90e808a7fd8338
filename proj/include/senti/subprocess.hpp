#pragma once

#include <csignal>
#include <cstring>
#include <string>
#include <string_view>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include "senti/core.hpp"

namespace senti {

class ProcessError : public Error {
public:
    using Error::Error;
};

struct ProcessResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

namespace detail {

inline void close_fd(int& fd) {
    if (fd >= 0) {
        ::close(fd);
        fd = -1;
    }
}

}  // namespace detail

// Runs `command` through /bin/sh, feeding `input` to its stdin and capturing
// stdout/stderr. Reads and writes are interleaved with poll() so a child that
// streams output while we are still writing input cannot deadlock either
// side on a full pipe.
inline ProcessResult run_process(const std::string& command, std::string_view input) {
    // Writing into a pipe the child already closed must surface as EPIPE,
    // not kill the session.
    static const bool sigpipe_ignored = [] {
        std::signal(SIGPIPE, SIG_IGN);
        return true;
    }();
    (void)sigpipe_ignored;

    int in_pipe[2], out_pipe[2], err_pipe[2];
    if (::pipe(in_pipe) != 0 || ::pipe(out_pipe) != 0 || ::pipe(err_pipe) != 0)
        throw ProcessError("pipe() failed for command: " + command);

    const pid_t pid = ::fork();
    if (pid < 0) throw ProcessError("fork() failed for command: " + command);
    if (pid == 0) {
        ::dup2(in_pipe[0], STDIN_FILENO);
        ::dup2(out_pipe[1], STDOUT_FILENO);
        ::dup2(err_pipe[1], STDERR_FILENO);
        ::close(in_pipe[0]);
        ::close(in_pipe[1]);
        ::close(out_pipe[0]);
        ::close(out_pipe[1]);
        ::close(err_pipe[0]);
        ::close(err_pipe[1]);
        ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        ::_exit(127);
    }

    int write_fd = in_pipe[1];
    int out_fd = out_pipe[0];
    int err_fd = err_pipe[0];
    ::close(in_pipe[0]);
    ::close(out_pipe[1]);
    ::close(err_pipe[1]);
    ::fcntl(write_fd, F_SETFL, O_NONBLOCK);

    ProcessResult result;
    std::size_t written = 0;
    if (input.empty()) detail::close_fd(write_fd);

    char buf[4096];
    while (out_fd >= 0 || err_fd >= 0 || write_fd >= 0) {
        pollfd fds[3];
        nfds_t nfds = 0;
        int write_idx = -1, out_idx = -1, err_idx = -1;
        if (write_fd >= 0) {
            write_idx = static_cast<int>(nfds);
            fds[nfds++] = {write_fd, POLLOUT, 0};
        }
        if (out_fd >= 0) {
            out_idx = static_cast<int>(nfds);
            fds[nfds++] = {out_fd, POLLIN, 0};
        }
        if (err_fd >= 0) {
            err_idx = static_cast<int>(nfds);
            fds[nfds++] = {err_fd, POLLIN, 0};
        }
        if (::poll(fds, nfds, -1) < 0) {
            if (errno == EINTR) continue;
            detail::close_fd(write_fd);
            detail::close_fd(out_fd);
            detail::close_fd(err_fd);
            ::waitpid(pid, nullptr, 0);
            throw ProcessError("poll() failed for command: " + command);
        }

        if (write_idx >= 0 && (fds[write_idx].revents & (POLLOUT | POLLERR | POLLHUP))) {
            const ssize_t n =
                ::write(write_fd, input.data() + written, input.size() - written);
            if (n > 0) {
                written += static_cast<std::size_t>(n);
                if (written == input.size()) detail::close_fd(write_fd);
            } else if (n < 0 && errno != EAGAIN && errno != EINTR) {
                detail::close_fd(write_fd);  // child stopped reading; keep draining output
            }
        }
        for (auto [idx, fd_ptr, sink] :
             {std::tuple{out_idx, &out_fd, &result.out}, std::tuple{err_idx, &err_fd, &result.err}}) {
            if (idx < 0 || !(fds[idx].revents & (POLLIN | POLLHUP | POLLERR))) continue;
            const ssize_t n = ::read(*fd_ptr, buf, sizeof buf);
            if (n > 0) sink->append(buf, static_cast<std::size_t>(n));
            else if (n == 0 || (n < 0 && errno != EAGAIN && errno != EINTR)) detail::close_fd(*fd_ptr);
        }
    }

    int status = 0;
    ::waitpid(pid, &status, 0);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    else if (WIFSIGNALED(status)) result.exit_code = 128 + WTERMSIG(status);
    else result.exit_code = -1;
    return result;
}

// Single-quotes a path or argument for /bin/sh.
inline std::string shell_quote(std::string_view arg) {
    std::string out = "'";
    for (char c : arg) {
        if (c == '\'') out += "'\\''";
        else out += c;
    }
    out += '\'';
    return out;
}

}  // namespace senti
