#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pierce::cli {

// Full command-line front end. `args` excludes the program name. Returns
// the process exit code: 0 success, 1 mathematically notable outcome
// (piercing pair found, lambda >= 5 hit, golden data failed
// re-certification), 2 input or usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace pierce::cli
