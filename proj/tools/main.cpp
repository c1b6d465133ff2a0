#include <iostream>
#include <string>
#include <vector>

#include "filterless/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = filterless::cli::run_command(args, std::cin);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
