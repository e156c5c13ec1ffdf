#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace valuedyn::cli
{

// Exit codes shared by every subcommand.
enum ExitStatus : int
{
    success = 0,   // command ran, verdict holds / nothing to report
    violation = 1, // negative verdict or condition violation found
    usage = 2,     // bad arguments, unreadable or invalid model file
};

// Runs the command line `args` (without the program name), writing results to
// `out` and diagnostics to `err`.
int run( std::vector< std::string > args, std::ostream& out, std::ostream& err );

} // namespace valuedyn::cli
