#include <iostream>
#include <vector>

#include "prodwidth/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return prodwidth::cli::run(std::move(args), std::cout, std::cerr);
}
