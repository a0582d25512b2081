#include <iostream>
#include <vector>

#include "thilb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return thilb::cli::run(args, std::cout, std::cerr);
}
