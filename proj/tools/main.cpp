#include <cstdlib>
#include <cstring>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  flatlat::Limits limits;
  if (const char* v = std::getenv("FLATLAT_LIMIT_OVERRIDE")) limits.lift_soft_limits = std::strcmp(v, "1") == 0;
  return flatlat::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr, limits);
}
