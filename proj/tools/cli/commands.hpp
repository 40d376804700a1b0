#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace powerlambda::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kViolation = 2,
  kResourceLimit = 3,
};

/// Runs the command line `args` (without the program name) and returns the
/// exit code. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powerlambda::cli
