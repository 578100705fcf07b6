#include <iostream>

#include "icycle/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return icycle::cli::main_entry(argc, argv, std::cin, std::cout, std::cerr);
}
