#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psba {

// Command-line front end (subcommands: solve, agreement, gen, bench),
// callable in-process. `args` excludes the program name. Returns the exit
// code: 0 success, 1 verification mismatch or internal failure, 2 invalid
// input or usage, 3 budget exhausted, 4 no valid placement.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace psba
