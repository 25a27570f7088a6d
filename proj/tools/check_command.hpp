#pragma once

#include <iosfwd>
#include <string>

namespace gbcert::cli {

enum ExitCode : int {
  kPositive = 0,
  kNegative = 1,
  kUsage = 2,
  kBudget = 3,
  kRejected = 4,
};

/// Reads all of `path` ("-" for stdin). Throws MalformedJson if unreadable.
std::string read_input(const std::string& path);

/// Checks a certificate document (a bare certificate or a result envelope
/// holding one) and writes the report JSON to `out`. Returns 0 when
/// accepted, 4 when rejected and 2 when the input cannot be parsed.
int run_check(const std::string& text, std::ostream& out);

}  // namespace gbcert::cli
