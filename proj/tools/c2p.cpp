#include <iostream>
#include <string>
#include <vector>

#include "c2p/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return c2p::cli::run(args, std::cout, std::cerr);
}
