#include <iostream>

#include "quiltlab/cli.hpp"

int main(int argc, char** argv) {
  return quiltlab::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
