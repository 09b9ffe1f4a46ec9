#include <iostream>
#include <string>
#include <vector>

#include "segalkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return segal::run_cli(args, std::cout);
}
