#include <iostream>
#include <string>
#include <vector>

#include "emdstego/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return emdstego::cli::run(args, std::cout, std::cerr);
}
