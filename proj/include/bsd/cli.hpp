#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bsd::cli {

enum ExitCode : int {
    kOk = 0,
    kUsageError = 2,
    kLimitRefused = 3,
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsd::cli
