#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ahp::cli {

/// Exit status contract shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kDataError = 1,     // parse or validation failure
  kNumericError = 2,  // non-convergence or a failed identity/fit gate
  kUsageError = 3,
};

/// Runs the `compute | verify | generate | experiment` command line.
/// args[0] is the program name. Machine-readable results go to `out`,
/// single-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ahp::cli
