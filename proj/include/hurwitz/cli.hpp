#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hurwitz {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitCap = 3,
  kExitSuiteFailure = 4,
};

// Runs the CLI on `args` (without the program name).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hurwitz
