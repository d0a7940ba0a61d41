#pragma once

#include <cstdint>
#include <random>

#include "signsum/core.hpp"

namespace signsum {

// Seeded generator with hand-rolled bounded draws; the std distributions
// are implementation-defined, and identical seeds must reproduce identical
// bytes everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform over [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  double uniform_real(double lo, double hi) {
    const double unit =
        static_cast<double>(engine_() >> 11) * 0x1.0p-53;  // [0, 1)
    return lo + unit * (hi - lo);
  }

 private:
  std::mt19937_64 engine_;
};

// Random instance with n in [0, max_n] and |b_i| <= max_coeff (zeros
// included). Half the draws plant a realized signed sum as the target so
// nonzero counts stay common; the rest draw the target near the weight
// range, reaching unreachable and parity-infeasible targets too.
inline Instance random_instance(Rng& rng, int max_n, int max_coeff) {
  Instance instance;
  const int n = static_cast<int>(rng.uniform(0, max_n));
  instance.coeffs.reserve(static_cast<std::size_t>(n));
  std::int64_t realized = 0;
  for (int i = 0; i < n; ++i) {
    const std::int64_t coeff = rng.uniform(-max_coeff, max_coeff);
    instance.coeffs.push_back(coeff);
    realized += rng.uniform(0, 1) == 0 ? coeff : -coeff;
  }
  if (rng.uniform(0, 1) == 0) {
    instance.target = realized;
  } else {
    const std::int64_t bound =
        static_cast<std::int64_t>(max_coeff) * n + 2;
    instance.target = rng.uniform(-bound, bound);
  }
  return instance;
}

inline ProductSpec random_spec(Rng& rng, int max_n, int max_coeff) {
  ProductSpec spec;
  spec.instance = random_instance(rng, max_n, max_coeff);
  spec.m = static_cast<int>(rng.uniform(-1, spec.instance.n()));
  return spec;
}

}  // namespace signsum
