#include <iostream>  // for cout, cerr
#include <string>    // for string
#include <vector>    // for vector

#include "cli.hpp"  // for run

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return assemblies::cli::run(args, std::cout, std::cerr);
}
