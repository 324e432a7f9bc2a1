// Test main with a --seed=N flag for the randomized property suites.
#pragma once
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <string>
#include <vector>

inline unsigned long long prop_seed = 0x5eedc0de;

int main(int argc, char** argv) {
  std::vector<char*> args;
  for (int i = 0; i < argc; ++i) {
    std::string a = argv[i];
    if (a.rfind("--seed=", 0) == 0) {
      prop_seed = std::stoull(a.substr(7));
      continue;
    }
    args.push_back(argv[i]);
  }
  doctest::Context ctx((int)args.size(), args.data());
  return ctx.run();
}
