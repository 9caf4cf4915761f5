#include "latgeo/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return latgeo::cli::run(argc, argv, std::cout, std::cerr);
}
