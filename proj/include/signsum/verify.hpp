#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "signsum/counting.hpp"

namespace signsum {

struct PropertyOptions {
  std::uint64_t seed = 42;
  int trials = 100;
  int max_n = 10;
  int max_coeff = 9;
  int enumeration_cap = kDefaultEnumerationCap;
};

struct PropertyResult {
  std::string name;
  bool passed = false;
  int trials = 0;
  std::string counterexample;  // empty when passed
  std::string note;            // extra detail shown on the report line
};

// Randomized cross-engine battery: every engine pair and identity the
// library promises, checked on seeded random instances. Deterministic for
// a fixed option set.
std::vector<PropertyResult> run_property_battery(const PropertyOptions& options);

}  // namespace signsum
