#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcbounds {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name.
/// Subcommands: bound, identity, sweep, corollaries, means, qc.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcbounds
