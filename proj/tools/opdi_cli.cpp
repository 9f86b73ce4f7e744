#include <iostream>
#include <string>
#include <vector>

#include "opdi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return opdi::run_cli(args, std::cout, std::cerr);
}
