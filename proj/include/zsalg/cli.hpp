#pragma once

#include <iosfwd>

namespace zsalg {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitCap = 3 };

/// The whole command-line tool; main() only forwards to this.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zsalg
