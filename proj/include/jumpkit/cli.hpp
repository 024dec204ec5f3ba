#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jumpkit {

enum ExitCode { exit_ok = 0, exit_io = 1, exit_invalid_config = 2, exit_numeric_failure = 3 };

// Entry point of the jumpkit command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& err);

}  // namespace jumpkit
