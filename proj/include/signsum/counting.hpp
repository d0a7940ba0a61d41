#pragma once

#include "signsum/core.hpp"

namespace signsum {

// Guard for the 2^n enumeration engines. Configurable per call; the DP
// engines have no cap.
inline constexpr int kDefaultEnumerationCap = 25;

// DP tables hold 2*weight+1 unbounded integers per parity slice; beyond
// this the table does not fit desk-scale memory.
inline constexpr std::int64_t kMaxDpWeight = 10'000'000;

// Restriction of the count to sign vectors whose number of +1 entries
// among the first m coefficients is even. m = -1 or 0 leaves the prefix
// empty, so the condition is vacuous and the count equals the plain one.
struct ParityQuery {
  Instance instance;
  int m = -1;

  bool operator==(const ParityQuery&) const = default;
};

// Number of sign vectors e in {+1,-1}^n with sum(e_i * b_i) = b0, by
// exhaustive enumeration. Throws ResourceLimitError when n exceeds the cap.
Count brute_force_count(const Instance& instance,
                        int enumeration_cap = kDefaultEnumerationCap);

// Same count via dynamic programming over the achievable-sum axis
// [-weight, weight]; O(n * weight) time, two rolling rows of space.
// Returns 0 without building a table when |b0| > weight.
Count dp_count(const Instance& instance);

// Enumeration engine for the parity-restricted count.
Count brute_force_parity_count(const ParityQuery& query,
                               int enumeration_cap = kDefaultEnumerationCap);

// DP engine for the parity-restricted count; the state carries the parity
// of +1 signs seen in the prefix alongside the achievable sum.
Count dp_parity_count(const ParityQuery& query);

// Counts through the exact cosine-product expansion: the constant
// coefficient of prod cos(b_i x) is count / 2^n, so scaling it back up
// must give an exact nonnegative integer (a logic_error otherwise).
Count count_via_integral(const Instance& instance);

}  // namespace signsum
