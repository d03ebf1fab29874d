#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splitorder::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

// Runs the command line `args` (without the program name), writing results
// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitorder::cli
