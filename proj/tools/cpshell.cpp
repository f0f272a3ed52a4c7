#include <iostream>

#include "cpshell/cli.hpp"

int main(int argc, char** argv) {
  return cpshell::cli::run(argc, argv, std::cout, std::cerr);
}
