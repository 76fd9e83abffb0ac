#pragma once

// Command-line front end. Exit codes: 0 ok, 1 usage or unexpected error,
// 2 invalid input (parse or validation), 3 infeasible p, 4 enumeration
// budget exceeded.

#include <iosfwd>

namespace pfdisp::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kInfeasible = 3,
  kBudget = 4,
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pfdisp::cli
