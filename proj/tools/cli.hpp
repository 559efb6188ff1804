#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace perfectforms::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsage = 2,
    kNotPositiveDefinite = 3,
    kNotPerfect = 4,
    kCapExceeded = 5,
};

/// Runs the command line `args` (without the program name). The JSON
/// payload goes to `out`, messages to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace perfectforms::cli
