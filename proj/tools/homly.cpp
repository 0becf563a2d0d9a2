#include <iostream>
#include <string>
#include <vector>

#include "homly/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return homly::run_cli(args, std::cin, std::cout, std::cerr);
}
