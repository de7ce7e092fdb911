#include <iostream>
#include <string>
#include <vector>

#include "bpdfq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bpdfq::run_cli(args, std::cout, std::cerr);
}
