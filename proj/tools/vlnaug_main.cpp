#include <iostream>
#include <string>
#include <vector>

#include "vlnaug/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return vlnaug::cli::run(args, std::cerr);
}
