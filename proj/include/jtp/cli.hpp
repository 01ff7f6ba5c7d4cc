#pragma once

#include <iosfwd>

namespace jtp::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kNumericalFailure = 3,
};

// Entry point of the jtpctl tool; writes results to out and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jtp::cli
