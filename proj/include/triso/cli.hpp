#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace triso::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationError = 1,
  kNumericalFailure = 2,
  kReproFailure = 3,
};

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out`, diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace triso::cli
