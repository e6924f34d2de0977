#include <iostream>
#include <string>
#include <vector>

#include "fraclap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fraclap::cli::run(args, std::cout, std::cerr);
}
