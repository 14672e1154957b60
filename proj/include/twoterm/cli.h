#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twoterm {

// Runs the command line `args` (without the program name). Exit codes: 0 ok,
// 1 domain or input error, 2 usage error.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace twoterm
