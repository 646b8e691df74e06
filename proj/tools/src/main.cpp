#include <iostream>
#include <string>
#include <vector>

#include "quatdirac_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quatdirac::cli::run(args, std::cout, std::cerr);
}
