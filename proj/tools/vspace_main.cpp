#include <iostream>

#include "vspace/cli.hpp"

int main(int argc, char** argv) {
  const auto outcome = vspace::cli::run(std::vector<std::string>(argv + 1, argv + argc));
  (outcome.exit_code == 2 ? std::cerr : std::cout) << outcome.report;
  return outcome.exit_code;
}
