#include <iostream>
#include <string>
#include <vector>

#include "fibrecheck/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fibrecheck::cli::run(args, std::cin, std::cout, std::cerr);
}
