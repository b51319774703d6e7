#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nzc {

enum ExitCode { kExitPass = 0, kExitVerification = 1, kExitInput = 2, kExitStructural = 3 };

/// Runs one subcommand. Summaries go to `out`, diagnostics to `err`;
/// artifacts are written only to the files named on the command line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nzc
