#include <iostream>
#include <string>
#include <vector>

#include "thetadim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return thetadim::cli_main(args, std::cout, std::cerr);
}
