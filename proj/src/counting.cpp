#include "signsum/counting.hpp"

#include <cstdlib>
#include <utility>
#include <vector>

#include "signsum/werner.hpp"

namespace signsum {

namespace {

// Hard ceiling regardless of the configured cap: masks are 64-bit.
constexpr int kMaskWidthLimit = 62;

void check_enumeration_cap(int n, int cap) {
  if (n > cap) {
    throw ResourceLimitError("enumeration engines are limited to n <= " +
                             std::to_string(cap) + " (cap), got n = " +
                             std::to_string(n));
  }
  if (n > kMaskWidthLimit) {
    throw ResourceLimitError("enumeration masks are 64-bit; n = " +
                             std::to_string(n) + " exceeds " +
                             std::to_string(kMaskWidthLimit));
  }
}

void check_parity_range(const ParityQuery& query) {
  if (query.m < -1 || query.m > query.instance.n()) {
    throw PreconditionError("parity prefix m must be in -1.." +
                            std::to_string(query.instance.n()) + ", got " +
                            std::to_string(query.m));
  }
}

// Gray-code walk over all 2^n sign vectors: consecutive masks differ in
// one bit, so the running sum changes by +-2*b_j. `visit` sees the signed
// sum and the number of +1 signs among the first prefix_len coefficients.
template <typename Visit>
void enumerate_sign_vectors(const Instance& instance, int prefix_len,
                            Visit&& visit) {
  const int n = instance.n();
  __int128 sum = 0;
  for (std::int64_t coeff : instance.coeffs) {
    sum -= coeff;  // all-minus start, mask 0
  }
  int positives = 0;
  visit(sum, positives);
  if (n == 0) {
    return;
  }
  std::uint64_t mask = 0;
  const std::uint64_t last = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t i = 1; i <= last; ++i) {
    const int j = __builtin_ctzll(i);
    mask ^= std::uint64_t{1} << j;
    const bool now_positive = (mask >> j) & 1u;
    const __int128 step = 2 * static_cast<__int128>(
                                  instance.coeffs[static_cast<std::size_t>(j)]);
    sum += now_positive ? step : -step;
    if (j < prefix_len) {
      positives += now_positive ? 1 : -1;
    }
    visit(sum, positives);
  }
}

std::int64_t dp_half_width(const Instance& instance) {
  const Int w = weight(instance);
  if (w > kMaxDpWeight) {
    throw ResourceLimitError("dp table needs weight <= " +
                             std::to_string(kMaxDpWeight) + ", got weight = " +
                             w.get_str());
  }
  return w.get_si();
}

}  // namespace

Count brute_force_count(const Instance& instance, int enumeration_cap) {
  check_enumeration_cap(instance.n(), enumeration_cap);
  const __int128 target = instance.target;
  unsigned long hits = 0;
  enumerate_sign_vectors(instance, 0, [&](__int128 sum, int) {
    if (sum == target) {
      ++hits;
    }
  });
  return Count(hits);
}

Count brute_force_parity_count(const ParityQuery& query, int enumeration_cap) {
  check_parity_range(query);
  check_enumeration_cap(query.instance.n(), enumeration_cap);
  const __int128 target = query.instance.target;
  unsigned long hits = 0;
  enumerate_sign_vectors(query.instance, query.m,
                         [&](__int128 sum, int positives) {
                           if (sum == target && positives % 2 == 0) {
                             ++hits;
                           }
                         });
  return Count(hits);
}

Count dp_count(const Instance& instance) {
  const Int w = weight(instance);
  if (abs(Int(instance.target)) > w) {
    return 0;
  }
  const std::int64_t half = dp_half_width(instance);
  const std::size_t size = static_cast<std::size_t>(2 * half + 1);
  std::vector<Count> cur(size), next(size);
  std::int64_t lo = half, hi = half;  // reachable window, offset coordinates
  cur[static_cast<std::size_t>(half)] = 1;
  for (std::int64_t coeff : instance.coeffs) {
    const std::int64_t a = std::abs(coeff);
    const std::int64_t nlo = lo - a;
    const std::int64_t nhi = hi + a;
    for (std::int64_t s = nlo; s <= nhi; ++s) {
      Count& dst = next[static_cast<std::size_t>(s)];
      const std::int64_t u = s - a;
      const std::int64_t v = s + a;
      const bool has_u = u >= lo && u <= hi && cur[static_cast<std::size_t>(u)] != 0;
      const bool has_v = v >= lo && v <= hi && cur[static_cast<std::size_t>(v)] != 0;
      if (has_u && has_v) {
        dst = cur[static_cast<std::size_t>(u)] + cur[static_cast<std::size_t>(v)];
      } else if (has_u) {
        dst = cur[static_cast<std::size_t>(u)];
      } else if (has_v) {
        dst = cur[static_cast<std::size_t>(v)];
      } else if (dst != 0) {
        dst = 0;
      }
    }
    std::swap(cur, next);
    lo = nlo;
    hi = nhi;
  }
  return cur[static_cast<std::size_t>(half + instance.target)];
}

Count dp_parity_count(const ParityQuery& query) {
  check_parity_range(query);
  const Instance& instance = query.instance;
  const Int w = weight(instance);
  if (abs(Int(instance.target)) > w) {
    return 0;
  }
  const std::int64_t half = dp_half_width(instance);
  const std::size_t size = static_cast<std::size_t>(2 * half + 1);
  // Slice index is the parity of +1 signs used in the prefix so far.
  std::vector<Count> cur[2] = {std::vector<Count>(size),
                               std::vector<Count>(size)};
  std::vector<Count> next[2] = {std::vector<Count>(size),
                                std::vector<Count>(size)};
  std::int64_t lo = half, hi = half;
  cur[0][static_cast<std::size_t>(half)] = 1;
  for (int i = 1; i <= instance.n(); ++i) {
    const std::int64_t coeff = instance.coeffs[static_cast<std::size_t>(i - 1)];
    const bool in_prefix = i <= query.m;
    const std::int64_t a = std::abs(coeff);
    const std::int64_t nlo = lo - a;
    const std::int64_t nhi = hi + a;
    for (int parity = 0; parity < 2; ++parity) {
      // Choosing +1 adds coeff and, inside the prefix, flips the parity.
      const int from_plus = in_prefix ? parity ^ 1 : parity;
      for (std::int64_t s = nlo; s <= nhi; ++s) {
        Count& dst = next[parity][static_cast<std::size_t>(s)];
        const std::int64_t u = s - coeff;  // previous sum if sign was +1
        const std::int64_t v = s + coeff;  // previous sum if sign was -1
        const bool has_u =
            u >= lo && u <= hi && cur[from_plus][static_cast<std::size_t>(u)] != 0;
        const bool has_v =
            v >= lo && v <= hi && cur[parity][static_cast<std::size_t>(v)] != 0;
        if (has_u && has_v) {
          dst = cur[from_plus][static_cast<std::size_t>(u)] +
                cur[parity][static_cast<std::size_t>(v)];
        } else if (has_u) {
          dst = cur[from_plus][static_cast<std::size_t>(u)];
        } else if (has_v) {
          dst = cur[parity][static_cast<std::size_t>(v)];
        } else if (dst != 0) {
          dst = 0;
        }
      }
    }
    std::swap(cur[0], next[0]);
    std::swap(cur[1], next[1]);
    lo = nlo;
    hi = nhi;
  }
  return cur[0][static_cast<std::size_t>(half + instance.target)];
}

Count count_via_integral(const Instance& instance) {
  const TrigPolynomial expansion = expand_cos_product(instance);
  const Rational scaled =
      expansion.cosine_coefficient(0) * Rational(pow2(instance.n()));
  if (!is_integer(scaled) || scaled < 0) {
    throw std::logic_error(
        "cosine expansion produced a non-integer or negative count: " +
        format_rational(scaled));
  }
  return scaled.get_num();
}

}  // namespace signsum
