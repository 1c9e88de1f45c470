#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boxspec {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitBadInput = 2, kExitResourceLimit = 3 };

/// Runs the command line `args` (without the program name). Data goes to `out`
/// unless --out names a file; diagnostics and summaries go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boxspec
