#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "support/seed.hpp"

namespace {
std::uint64_t g_seed = 20240611;
}

std::uint64_t testing_support::seed() { return g_seed; }

int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      g_seed = std::strtoull(argv[i] + 7, nullptr, 10);
    } else {
      rest.push_back(argv[i]);
    }
  }
  std::cout << "seed " << g_seed << "\n";
  doctest::Context ctx(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
