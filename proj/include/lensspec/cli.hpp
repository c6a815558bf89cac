#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lensspec {

/// Exit statuses of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitInvariant = 3 };

/// Runs one command line (program name excluded). Writes results to `out`
/// unless --out names a file, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lensspec
