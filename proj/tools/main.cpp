#include <iostream>
#include <string>
#include <vector>

#include "oddtree/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return oddtree::cli::run(args, std::cout, std::cerr);
}
