#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace girthspan::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kBudgetExhausted = 2,
    kUsageError = 64,
};

/// Runs one command line (args[0] is the program name) and returns its exit
/// code.  Reports and summaries go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace girthspan::cli
