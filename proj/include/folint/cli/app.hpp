#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace folint {

/// Runs the command line `args` (without the program name). The report
/// goes to `out`, usage errors to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace folint
