// Command-line front end. Exit codes: 0 pass, 1 mathematical failure, 2 usage.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uqsl2 {

enum ExitCode { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace uqsl2
