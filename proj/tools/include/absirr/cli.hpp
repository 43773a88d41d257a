#pragma once

// Command-line front end. Kept as a library so tests can drive it in-process.

#include <exception>
#include <ostream>
#include <span>
#include <string>

namespace absirr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitInternal = 2;

// Runs one invocation; `args` excludes the program name. Output goes to
// `out`, diagnostics to `err`. Returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// Writes a diagnostic for a failed command and returns its exit code:
// kExitDomain for DomainError, kExitInternal for InvariantViolation and any
// other exception.
int report_failure(std::exception_ptr failure, std::ostream& err);

}  // namespace absirr::cli
