#include <iostream>
#include <string>
#include <vector>

#include "semiq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return semiq::cli::run(args, std::cin, std::cout, std::cerr);
}
