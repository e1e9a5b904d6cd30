#include <splinedict/cli.hpp>

#include <vector>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return splinedict::run_cli(args);
}
