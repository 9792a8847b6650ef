#ifndef DYNNIKOV_CLI_HPP
#define DYNNIKOV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dynnikov {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_malformed = 2, exit_invalid = 3 };

/// Runs the command line `args` (without the program name). Documents named
/// "-" or omitted are read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dynnikov

#endif  // DYNNIKOV_CLI_HPP
