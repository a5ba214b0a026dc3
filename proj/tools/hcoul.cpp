#include <iostream>

#include "hc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hc::run(args, std::cout, std::cerr);
}
