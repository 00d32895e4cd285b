#include <iostream>
#include <string>
#include <vector>

#include "tristring_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tristring::cli::run(args, std::cout, std::cerr);
}
