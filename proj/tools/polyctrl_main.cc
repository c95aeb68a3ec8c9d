#include <iostream>
#include <string>
#include <vector>

#include "polyctrl/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polyctrl::cli::Run(args, std::cin, std::cout, std::cerr);
}
