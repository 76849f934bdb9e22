#include <iostream>

#include "nulldays/cli.hpp"

int main(int argc, char** argv) {
  return nulldays::cli::run(argc, argv, std::cout, std::cerr);
}
