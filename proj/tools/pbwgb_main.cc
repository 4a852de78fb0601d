#include <iostream>
#include <string>
#include <vector>

#include "pbwgb/cli.hh"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  pbwgb::CliResult r = pbwgb::run_command(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
