#pragma once

#include <string>
#include <vector>

namespace acw {

// Dispatches a full subcommand line (excluding argv[0]). Returns the process
// exit code: 0 success, 1 verification failure, 2 usage error.
int run_cli(std::vector<std::string> args);

}  // namespace acw
