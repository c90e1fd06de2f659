#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polydecomp::cli {

/// Exit codes: 0 success, 2 usage or parse error, 3 domain error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Runs the command line `args` (args[0] is the program name) and writes
/// results to `out`, diagnostics to `err`. `--out PATH` redirects results.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count from POLYDECOMP_THREADS (0 when unset or invalid).
unsigned threads_from_env();

}  // namespace polydecomp::cli
