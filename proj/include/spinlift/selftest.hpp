#pragma once
// Randomized invariant suite over the whole library, runnable from the CLI.

#include <cstdint>
#include <string>
#include <vector>

#include "spinlift/random.hpp"

namespace spinlift {

struct SelfTestOptions {
  int rank_max = 3;
  std::uint64_t seed = 0;
  std::vector<Field> fields = {Field::rationals(), Field::prime(7), Field::prime(11)};
};

struct SelfTestResult {
  struct Item {
    std::string name;
    bool passed;
    std::string detail;  // empty when passed
  };

  std::vector<Item> items;

  bool all_passed() const {
    for (const auto& item : items) {
      if (!item.passed) return false;
    }
    return true;
  }
};

SelfTestResult run_selftest(const SelfTestOptions& options);

}  // namespace spinlift
