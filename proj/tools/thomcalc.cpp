#include <iostream>

#include "thomcalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return thomcalc::run_cli(args, std::cout, std::cerr);
}
