#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace c2p::cli {

/// Process exit codes.
enum ExitCode : int {
  kFeasible = 0,     // also: valid, satisfiable, success
  kInfeasible = 1,   // also: invalid, unsatisfiable
  kUsage = 2,        // bad arguments, unreadable or malformed files
  kInvariant = 3,    // input violates a structural invariant
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace c2p::cli
