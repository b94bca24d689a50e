#include <iostream>

#include "frob/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return frob::run_cli(args, std::cout, std::cerr);
}
