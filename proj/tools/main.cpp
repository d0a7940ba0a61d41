#include <iostream>
#include <vector>

#include "signsum/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return signsum::run_cli(args, std::cout, std::cerr);
}
