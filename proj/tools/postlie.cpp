#include <iostream>
#include <string>
#include <vector>

#include "postlie/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = postlie::run_command(args);
  (result.exit_code == 2 ? std::cerr : std::cout) << result.output;
  return result.exit_code;
}
