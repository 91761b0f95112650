#pragma once

#include <cstddef>
#include <iosfwd>

namespace hyperlap::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kNumericalFailure = 3,
  kBoundViolation = 4,
  kVerificationFailure = 5,
};

inline constexpr std::size_t kMaxSize = 512;

/// Entry point shared by the executable and the in-process tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperlap::cli
