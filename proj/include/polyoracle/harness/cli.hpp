#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyoracle::harness {

/// Exit codes: 0 success, 1 a decision answered "no" or a verification
/// failed, 2 usage or malformed input, 3 cap or precondition errors.
enum ExitCode : int { kExitOk = 0, kExitNo = 1, kExitUsage = 2, kExitLimit = 3 };

/// Subcommands solve, formulate, verify-circuit, permanent, setcover,
/// bench-vars, selftest. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyoracle::harness
