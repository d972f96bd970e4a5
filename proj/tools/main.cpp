#include <iostream>

#include "numsg/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const numsg::cli::CommandResult result = numsg::cli::run(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
