#include <iostream>
#include <string>
#include <vector>

#include "lfkmsd/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return lfkmsd::cli::run(args, std::cout, std::cerr);
}
