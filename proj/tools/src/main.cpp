#include <iostream>

#include "grassqh_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grassqh::cli::run(args, std::cout, std::cerr);
}
