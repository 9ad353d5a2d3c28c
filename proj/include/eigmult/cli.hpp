#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eigmult {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitInvariant = 1, kExitInput = 2, kExitEngine = 3 };

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out` as JSON (or text with --format text), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eigmult
