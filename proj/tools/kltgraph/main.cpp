#include <iostream>

#include "kltgraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kltgraph::cli::run(args, std::cout, std::cerr);
}
