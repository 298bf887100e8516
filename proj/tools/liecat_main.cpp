#include <iostream>
#include <vector>

#include "liecat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liecat::cli::run(args, std::cout, std::cerr);
}
