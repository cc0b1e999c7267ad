#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace feasflow::cli {

// Runs the command line (args exclude the program name) against the given
// streams and returns the process exit code: 0 success/feasible, 1
// infeasible or verification failure, 2 input or usage error. Machine
// output goes to `out`, diagnostics and traces to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace feasflow::cli
