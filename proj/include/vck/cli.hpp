#pragma once

#include <string>
#include <vector>

namespace vck {

// Exit codes: 0 success, 1 usage, 2 validation failure, 3 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::string& out, std::string& err);
int run_cli_main(int argc, char** argv);

}  // namespace vck
