#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specpos {

// Runs the command-line tool on the given arguments (program name
// excluded), writing to the supplied streams. Returns the process exit
// code: 0 for success, 1 when `check` finds the property false (or
// `catalog verify` finds a mismatch), 2 for usage, parse, or validation
// errors.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

// argv wrapper for main().
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace specpos
