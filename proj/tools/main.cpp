#include <iostream>
#include <string>
#include <vector>

#include "m0n/cli.hpp"

int main(int argc, char** argv) {
  return m0n::cli::run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout,
                       std::cerr);
}
