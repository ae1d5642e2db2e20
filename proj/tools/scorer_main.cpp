#include <iostream>

#include "scorer/cli.hpp"

int main(int argc, char** argv) {
  return scorer::cli::run(argc, argv, std::cout, std::cerr);
}
