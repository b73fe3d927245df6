#include <iostream>

#include "lerchsum/cli.hpp"

int main(int argc, char** argv) {
  return lerchsum::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
