#include <iostream>
#include <string>
#include <vector>

#include "lapbound/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lapbound::run_cli(args, std::cin, std::cout, std::cerr);
}
