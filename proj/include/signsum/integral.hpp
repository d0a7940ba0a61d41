#pragma once

#include <cstdint>

#include "signsum/core.hpp"
#include "signsum/werner.hpp"

namespace signsum {

// Integration interval [-q*pi, p*pi]. p = -q is the degenerate (empty)
// interval; p < -q is rejected.
struct PiBounds {
  std::int64_t p = 1;
  std::int64_t q = 0;

  bool operator==(const PiBounds&) const = default;
};

// Term-by-term closed-form integration over [-q*pi, p*pi]: the constant
// cosine term contributes c0 * (p+q) * pi, higher cosine terms vanish, and
// a sine term at frequency k contributes s_k * ((-1)^(kq) - (-1)^(kp)) / k.
ExactValue exact_integral(const TrigPolynomial& poly, const PiBounds& bounds);

// Counts solutions through the identity count = (2^n / pi) *
// integral_0^pi of the cosine product: integrates the expansion over
// [0, pi] and scales the pi coefficient back up. Equals dp_count.
Count cosine_integral_count(const Instance& instance);

// Closed-form value of integral over [-q*pi, p*pi] of the mixed product,
// computed purely from the DP counts: zero for m = 0, 2 (mod 4) and
// -/+ (p+q) (2*T_em - T) / 2^n * pi for m = 1, 3 (mod 4). Carries the
// factor pi; the pi coefficient alone is the commonly stated form, which
// this library treats as dropping that factor (callers report both).
// Requires 0 <= m <= n and p + q even.
ExactValue integral_from_counts(const ProductSpec& spec,
                                const PiBounds& bounds);

}  // namespace signsum
