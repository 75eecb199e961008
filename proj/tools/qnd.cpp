#include <iostream>

#include "qnd/cli.hpp"

int main(int argc, char* argv[]) {
  return qnd::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
