#include <iostream>
#include <string>
#include <vector>

#include "bmat/cli.hpp"

int main(int argc, char** argv) {
  return bmat::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
