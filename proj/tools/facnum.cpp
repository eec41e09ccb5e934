#include <iostream>
#include <string>
#include <vector>

#include "facnum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return facnum::run_cli(args, std::cout, std::cerr);
}
