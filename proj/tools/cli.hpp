#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqcycles::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kMismatch = 1,
    kUsage = 2,
    kResource = 3,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqcycles::cli
