#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sectoria::cli {

// Exit codes of every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitViolated = 3;

/// Runs `sectoria <args...>` (args excludes the program name) writing to the
/// given streams, and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default tolerance: SECTORIA_TOL when set and parseable, else 1e-8.
double default_tolerance();

}  // namespace sectoria::cli
