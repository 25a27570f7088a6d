#pragma once

#include <chrono>
#include <string>

namespace gbcert {

struct ProcessResult {
  int exit_code = -1;
  bool timed_out = false;
  std::string out;
  std::string err;
};

/// Runs `command` through /bin/sh with `input` on its stdin and collects
/// stdout and stderr. On timeout the whole process group is killed and
/// `timed_out` is set. Throws OracleSpawnFailure if the process cannot be
/// started at all.
ProcessResult run_process(const std::string& command, const std::string& input,
                          std::chrono::milliseconds timeout);

}  // namespace gbcert
