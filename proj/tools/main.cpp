//
// semilab - finite semirings, semimodules and their structure theory
//

#include <iostream>  // for cout, cerr
#include <string>    // for string
#include <vector>    // for vector

#include "semilab/cli.hpp"  // for run

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return semilab::cli::run(args, std::cout, std::cerr);
}
