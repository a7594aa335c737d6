#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace patrep {

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`. Returns the process exit code:
/// 0 pass, 1 verification failure, 2 invalid input, 3 resource limit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace patrep
