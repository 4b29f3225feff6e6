#include <iostream>
#include <string>
#include <vector>

#include "seqlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return seqlab::cli::run(args, std::cout, std::cerr);
}
