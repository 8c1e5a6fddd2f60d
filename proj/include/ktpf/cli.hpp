#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ktpf::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kInvalidInput = 3,
  kBudgetExceeded = 4,
};

/// Runs one invocation. `args` excludes the program name. Output is written to
/// `out` only once the command has succeeded; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ktpf::cli
