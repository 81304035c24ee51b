#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace malcev5 {

/// Exit codes of the command-line front end.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable capping the memo tables of the recursive oracle
/// (number of cached entries; 0 or unset means unbounded).
inline constexpr const char* kMemoLimitVariable = "MALCEV5_MEMO_LIMIT";

/// Runs one command line. `args` excludes the program name. Results go to
/// `out`; diagnostics and timings go to `err`, so `out` is byte-stable.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace malcev5
