#include <iostream>

#include "hurwitz/cli.hpp"

int main(int argc, char** argv) {
  return hurwitz::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
