#include <iostream>

#include "patrep/cli.hpp"

int main(int argc, char** argv) {
  return patrep::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
