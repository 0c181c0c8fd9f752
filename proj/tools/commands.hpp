#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bellpoly::cli {

enum ExitCode : int {
  kVerified = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kBudgetExhausted = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bellpoly::cli
