#include "chordflow/cli.hpp"

int main(int argc, char** argv) {
  return chordflow::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
