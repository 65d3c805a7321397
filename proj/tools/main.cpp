#include <iostream>
#include <string>
#include <vector>

#include "dicot/cli.hpp"

int main(int argc, char** argv) {
  return dicot::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
