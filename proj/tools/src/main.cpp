#include <iostream>

#include "topolab/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return topolab::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
