#include <iostream>

#include "burau/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return burau::run_cli(args, std::cout, std::cerr);
}
