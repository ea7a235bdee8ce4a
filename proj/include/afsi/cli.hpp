#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace afsi::cli {

/// Exit codes of every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kValidationFailure = 1,
    kUsageOrIoFailure = 2,
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace afsi::cli
