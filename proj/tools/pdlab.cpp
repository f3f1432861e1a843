#include <iostream>
#include <string>
#include <vector>

#include "pdlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pdlab::cli::main(args, std::cout, std::cerr);
}
