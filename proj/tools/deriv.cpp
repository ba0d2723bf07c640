#include <iostream>

#include "deriv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return deriv::cli::run(args, std::cout, std::cerr);
}
