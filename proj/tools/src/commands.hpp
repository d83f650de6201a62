#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leibcoh::cli {

enum ExitCode : int { exit_ok = 0, exit_identity = 1, exit_parse = 2, exit_resource = 3 };

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leibcoh::cli
