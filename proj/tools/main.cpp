#include <iostream>

#include "psiab/cli.hpp"

int main(int argc, char** argv) {
  return psiab::run_cli(argc, argv, std::cout, std::cerr);
}
