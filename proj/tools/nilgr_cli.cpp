#include <iostream>

#include "nilgr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nilgr::run_cli(args, std::cin, std::cout, std::cerr);
}
