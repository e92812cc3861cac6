#include <iostream>

#include "bdist/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bdist::cli::run(args, std::cout, std::cerr);
}
