#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hoqmc::cli {

/// Exit codes of the hoqmc tool.
enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kUsage = 2,
  kCapExceeded = 3,
  kInconsistent = 4,
};

/// Runs one command line (without the program name). Results go to `out`
/// unless an output file is named; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hoqmc::cli
