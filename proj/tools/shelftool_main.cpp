#include <iostream>

#include "shelfhom/tools/cli.hpp"

int main(int argc, char** argv) {
  return shelfhom::tools::run_cli(argc, argv, std::cout, std::cerr);
}
