#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "mcbdqm_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return mcbdqm::cli::run_cli(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << '\n';
    return 4;
  }
}
