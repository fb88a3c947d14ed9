#include <iostream>
#include <string>
#include <vector>

#include "minilb_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return minilb::cli::dispatch(args, std::cout, std::cerr);
}
