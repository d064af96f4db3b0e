#include <iostream>
#include <string>
#include <vector>

#include "shodge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return shodge::cli::run(args, std::cout, std::cerr);
}
