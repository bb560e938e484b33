// Entry point of the tbnet command-line front end, usable from tests.

#pragma once

#include <string>
#include <vector>

namespace tbnet::cli {

/// Exit codes: 0 success, 1 I/O or validation failure, 2 usage error.
int run(int argc, const char* const* argv);

/// args[0] is the program name, as in argv.
int run(const std::vector<std::string>& args);

}  // namespace tbnet::cli
