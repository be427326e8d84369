#ifndef RIORDAN_CLI_HPP
#define RIORDAN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace riordan {

/// Runs the command-line front end on `args` (without the program name).
/// Returns the process exit code; output goes to `out`, diagnostics to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace riordan

#endif
