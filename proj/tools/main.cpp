#include <iostream>

#include "so3contact/cli.hpp"

int main(int argc, char** argv) {
  return so3contact::cli::run(argc, argv, std::cout, std::cerr);
}
