#include <iostream>
#include <vector>

#include "zonocalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zonocalc::run_cli(args, std::cout, std::cerr);
}
