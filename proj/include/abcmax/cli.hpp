#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abcmax {

enum ExitCode : int { kExitOk = 0, kExitMustMatchFailed = 1, kExitUsage = 2 };

/// Runs the command line (args excludes the program name) against the given
/// streams and returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace abcmax
