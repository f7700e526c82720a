#include <iostream>

#include "viswork/cli_app.hpp"

int main(int argc, char** argv) {
  return viswork::cli_main(argc, argv, std::cout, std::cerr);
}
