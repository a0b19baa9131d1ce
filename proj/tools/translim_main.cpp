#include <iostream>

#include "translim/cli.hpp"

int main(int argc, char** argv) {
  return translim::cli::run(argc, argv, std::cout, std::cerr);
}
