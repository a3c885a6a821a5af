#include <iostream>
#include <string>
#include <vector>

#include "gaingraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return gaingraph::run(args, std::cout, std::cerr);
}
