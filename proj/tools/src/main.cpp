#include <iostream>

#include "hmi_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hmi::cli::run(args, std::cout, std::cerr);
}
