#include <iostream>
#include <string>
#include <vector>

#include "mukailat/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = mukailat::cli::run(args);
  std::cout << outcome.output;
  std::cerr << outcome.error;
  return outcome.exit_code();
}
