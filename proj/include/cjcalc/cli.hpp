#pragma once

#include <iosfwd>

namespace cjcalc {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitMismatch = 1,
  kExitInputError = 2,
};

/// Entry point of the `cjcalc` tool. Data goes to `out`; diagnostics,
/// progress and timings go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cjcalc
