#include <iostream>

#include "spinlift/cli.hpp"

int main(int argc, char** argv) {
  return spinlift::cli_main(argc, argv, std::cout, std::cerr);
}
