#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace asymult::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

// Runs the command line tool on `args` (args[0] is the program name).
// CSV goes to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asymult::cli
