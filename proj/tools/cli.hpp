#pragma once

#include <iosfwd>

namespace udecide::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kRuntimeError = 3,
};

/// Entry point of the `udecide` tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace udecide::cli
