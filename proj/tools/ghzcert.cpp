#include <iostream>
#include <string>
#include <vector>

#include "ghzcert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ghzcert::run_cli(args, std::cout, std::cerr);
}
