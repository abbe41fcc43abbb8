#ifndef COXETER_TOOLS_CLI_HPP
#define COXETER_TOOLS_CLI_HPP

#include <ostream>

namespace coxeter::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
/// A verification sweep or oracle check found a failure.
inline constexpr int kExitFailure = 1;
/// Bad command line, word, mask or group spec.
inline constexpr int kExitUsage = 2;
/// The request is well-formed but cannot be computed (unsupported type,
/// cap exceeded, numerical breakdown, ...).
inline constexpr int kExitError = 3;

/// Runs the command line; all output goes to `out` and `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coxeter::cli

#endif  // COXETER_TOOLS_CLI_HPP
