#include <iostream>
#include <string>
#include <vector>

#include "terracini/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return terracini::cli::run(args, std::cout, std::cerr);
}
