#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ginv {

// Runs the command line tool; returns the process exit code
// (0 = all checks pass, 1 = check failure, 2 = usage/parse error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ginv
