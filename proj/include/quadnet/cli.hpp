#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadnet {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitInvalidInput = 2, kExitInvariant = 3 };

/// Runs one command (arguments without the program name). The JSON report
/// goes to `out`, diagnostics to `err`.
int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace quadnet
