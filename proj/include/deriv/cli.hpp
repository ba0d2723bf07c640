#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace deriv::cli {

// Runs one command line (without the program name). Returns the exit code:
// 0 accepted / value / recognized, 1 rejected / diverged / not recognized,
// 2 usage or syntax error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deriv::cli
