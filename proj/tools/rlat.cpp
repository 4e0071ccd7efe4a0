#include <iostream>

#include "rlat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rlat::cli::run(args, std::cout, std::cerr);
}
