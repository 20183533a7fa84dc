#include <iostream>

#include "dsu2/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dsu2::cli::run(args, std::cout);
}
