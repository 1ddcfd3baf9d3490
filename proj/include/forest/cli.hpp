#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace forest {

// Runs one command line (without the program name). Exit status: 0 success,
// 1 a check failed, 2 the input could not be used.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace forest
