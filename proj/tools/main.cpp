#include <iostream>
#include <string>
#include <vector>

#include "galois/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return galois::cli::run_cli(args, std::cout, std::cerr);
}
