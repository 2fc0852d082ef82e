#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hlgeo {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // verify found failing checks
  kExitUsage = 2,
  kExitParse = 3,
  kExitValidity = 4,
  kExitBlowup = 5,
};

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlgeo
