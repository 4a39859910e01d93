#pragma once

#include <ostream>

namespace turnover {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitNumeric = 3 };

/// Parses argv and runs one subcommand, writing the report to `out` and
/// diagnostics to `err`.  Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace turnover
