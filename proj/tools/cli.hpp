#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace snax {

/// Exit codes returned by runCli.
enum ExitCode : int {
  kExitOk = 0,
  kExitRejected = 1,  // parse or type errors
  kExitStuck = 2,
  kExitConformance = 3,
  kExitBound = 4,
  kExitUsage = 64,
};

/// Runs the `snax` command line; args exclude the program name.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace snax
