#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace facnum {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerdictFailed = 1,
  kExitInvalidInput = 2,
  kExitResourceCap = 3,
};

/// Runs the command-line front end on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace facnum
