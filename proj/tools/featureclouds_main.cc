#include <iostream>
#include <string>
#include <vector>

#include "featureclouds/cli.h"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return featureclouds::cli::run(args, std::cout, std::cerr);
}
