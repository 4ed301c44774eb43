#include <iostream>
#include <string>
#include <vector>

#include "ahp/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return ahp::cli::run(args, std::cout, std::cerr);
}
