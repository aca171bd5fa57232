#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hraag::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
};

/// Environment variable naming the directory for relative --out paths.
inline constexpr const char* kOutDirEnv = "HRAAG_OUT_DIR";

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hraag::cli
