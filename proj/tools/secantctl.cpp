#include <iostream>
#include <string>
#include <vector>

#include "secant/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  if (!args.empty() && (args.front() == "-h" || args.front() == "--help")) {
    std::cout << secant::cli::usage();
    return secant::cli::kExitOk;
  }
  const auto result = secant::cli::main_entry(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
