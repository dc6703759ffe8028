#pragma once

#include <iosfwd>

namespace ngraph::cli {

/// Exit statuses. 1 is reserved for a mathematical failure (identity
/// violated, fiber mismatch, broken invariant).
inline constexpr int kOk = 0;
inline constexpr int kMathFailure = 1;
inline constexpr int kUsage = 2;

/// Parses argv (argv[0] is the program name) and runs one subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ngraph::cli
