#include <iostream>
#include <string>
#include <vector>

#include "lorentz/cli.hpp"

// Command layer lives in lorentz/cli.hpp; this translation unit only owns main.
int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lorentz::cli::run(args, std::cout, std::cerr);
}
