#include <iostream>

#include "homcurv_cli/cli.hpp"

int main(int argc, char** argv) {
  return homcurv::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
