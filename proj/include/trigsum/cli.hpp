#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trigsum::cli {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnexpectedFail = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable that overrides the default working precision.
inline constexpr const char* kPrecisionEnv = "TRIGSUM_PRECISION";

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trigsum::cli
