#include <iostream>

#include "lacunary/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto res = lacunary::run_command(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
