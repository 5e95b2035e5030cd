#include <iostream>

#include "realclass/cli.hpp"

int main(int argc, char** argv) {
  return realclass::cli::run(argc, argv, std::cout, std::cerr);
}
