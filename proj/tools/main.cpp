#include <iostream>

#include "eigmult/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eigmult::run_cli(args, std::cout, std::cerr);
}
