#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace etalab::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,
  kUsage = 2,
  kInsufficientPrecision = 3,
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace etalab::cli
