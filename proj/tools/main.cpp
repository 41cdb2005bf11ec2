#include <iostream>

#include "bellhopf/cli.hpp"

int main(int argc, char** argv) {
  return bellhopf::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
