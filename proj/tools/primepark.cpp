#include <iostream>

#include "primepark/cli.hpp"

int main(int argc, char** argv) {
  return primepark::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
