#include <iostream>
#include <string>
#include <vector>

#include "su2free/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return su2free::cli_run(args, std::cout, std::cerr);
}
