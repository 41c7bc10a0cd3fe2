#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mipl {

// Exit codes of the command line tool.
enum ExitCode { exit_ok = 0, exit_parse = 2, exit_config = 3, exit_budget = 4, exit_internal = 5 };

// Runs one command; args exclude the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mipl
