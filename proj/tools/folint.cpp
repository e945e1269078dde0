#include <iostream>

#include "folint/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return folint::run_cli(args, std::cout, std::cerr);
}
