#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmirred {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitBudget = 2, kExitInternal = 3 };

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmirred
