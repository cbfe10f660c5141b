#include <iostream>
#include <string>
#include <vector>

#include "plumbstein/cli.hpp"

int main(int argc, char** argv) {
  return plumbstein::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
