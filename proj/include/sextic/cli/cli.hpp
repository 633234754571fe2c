#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sextic::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kNumericFailure = 2,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sextic::cli
