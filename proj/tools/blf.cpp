#include <iostream>

#include "blf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return blf::run(args, std::cout, std::cerr);
}
