#pragma once

#include <string>
#include <vector>

namespace weyl::cli {

struct CommandResult {
  int exitCode = 0;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name). Exit codes: 0 on
/// success, 1 on a reported violation or an unexpected counterexample,
/// 2 on usage and input errors.
CommandResult runCommand(const std::vector<std::string>& args);

}  // namespace weyl::cli
