#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fatpoints {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2 };

/// Runs the command line `args` (without the program name). Results go to
/// out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fatpoints
