#include <iostream>
#include <string>
#include <vector>

#include "groupcx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return groupcx::run_cli(args, std::cout, std::cerr);
}
