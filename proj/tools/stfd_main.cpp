#include <string>
#include <vector>

#include "stfd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stfd::cli::run_cli(std::move(args));
}
