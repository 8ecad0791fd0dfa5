#include <iostream>
#include <vector>

#include "gbfam/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gbfam::run_cli(args, std::cout, std::cerr);
}
