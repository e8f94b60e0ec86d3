#include <iostream>
#include <string>
#include <vector>

#include "repgeo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return repgeo::run(args, std::cout, std::cerr);
}
