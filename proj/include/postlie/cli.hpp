#pragma once

#include <string>
#include <vector>

namespace postlie {

struct CommandResult {
  /// 0 success, 1 verification failure, 2 usage or parse error.
  int exit_code = 0;
  std::string output;
};

/// Runs one command line (without the program name) and captures its report.
CommandResult run_command(const std::vector<std::string>& args);

} // namespace postlie
