#include <iostream>

#include "specpos/cli.hpp"

int main(int argc, char** argv) {
  return specpos::run_cli(argc, argv, std::cout, std::cerr);
}
