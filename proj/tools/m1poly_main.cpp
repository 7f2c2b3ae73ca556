#include <iostream>
#include <string>
#include <vector>

#include "m1poly/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return m1poly::run_cli(args, std::cout, std::cerr);
}
