#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hmx {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitUsage = 1, kExitNumeric = 2 };

/// Runs one command line (args[0] is the program name). Human-readable
/// results go to `out`, diagnostics to `err`; `--report FILE` additionally
/// writes the JSON report.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_dispatch(int argc, const char* const* argv);

}  // namespace hmx
