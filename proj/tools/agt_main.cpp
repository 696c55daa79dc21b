#include <iostream>
#include <string>
#include <vector>

#include "agt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return agt::run_cli(args, std::cout, std::cerr);
}
