// isospec - element-order spectra of finite symplectic and orthogonal groups

#include <iostream>

#include "isospec/cli.hpp"

int main(int argc, char** argv) {
  return isospec::cli::run(argc, argv, std::cout, std::cerr);
}
