#include <iostream>

#include "ringshift/cli.hpp"

int main(int argc, char** argv) {
  return ringshift::cli::run(argc, argv, std::cout, std::cerr);
}
