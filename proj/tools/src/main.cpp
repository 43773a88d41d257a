#include <iostream>
#include <string>
#include <vector>

#include "absirr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return absirr::cli::run(args, std::cout, std::cerr);
}
