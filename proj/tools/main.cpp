#include <iostream>

#include "knotctl.hpp"

int main(int argc, char** argv) {
  return knotctl::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
