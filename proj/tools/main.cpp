#include <iostream>
#include <string>
#include <vector>

#include "mualcq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mualcq::run(args, std::cout, std::cerr);
}
