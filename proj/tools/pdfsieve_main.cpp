#include <iostream>
#include <string>
#include <vector>

#include "pdfsieve/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return pdfsieve::run_cli(args, std::cout, std::cerr);
}
