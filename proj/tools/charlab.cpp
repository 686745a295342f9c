#include <string>
#include <vector>

#include "charlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return charlab::run_cli(args);
}
