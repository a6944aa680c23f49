#include <iostream>
#include <string>
#include <vector>

#include "resdecomp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return resdecomp::cli::execute(args, std::cout, std::cerr);
}
