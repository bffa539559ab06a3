#include <iostream>
#include <string>
#include <vector>

#include "polyoracle/harness/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polyoracle::harness::run_cli(args, std::cout, std::cerr);
}
