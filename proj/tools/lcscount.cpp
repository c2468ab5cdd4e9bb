#include <iostream>
#include <string>
#include <vector>

#include "lcscount/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lcscount::cli::run(args, std::cout, std::cerr, std::cin);
}
