#include <iostream>

#include "spincount/cli.hpp"

int main(int argc, char** argv) {
  return spincount::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
