#include <iostream>

#include "gamma_enclose/harness.hpp"

int main(int argc, char** argv) {
  return gamma_enclose::harness::run_cli(argc, argv, std::cout, std::cerr);
}
