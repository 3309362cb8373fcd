#include <vector>
#include <string>

#include "acw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return acw::run_cli(std::move(args));
}
