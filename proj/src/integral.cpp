#include "signsum/integral.hpp"

#include <cstdlib>

#include "signsum/counting.hpp"

namespace signsum {

namespace {

void check_bounds(const PiBounds& bounds) {
  if (bounds.p + bounds.q < 0) {
    throw PreconditionError("bounds must satisfy -q <= p, got p = " +
                            std::to_string(bounds.p) + ", q = " +
                            std::to_string(bounds.q));
  }
}

bool odd(std::int64_t value) { return value % 2 != 0; }

}  // namespace

ExactValue exact_integral(const TrigPolynomial& poly, const PiBounds& bounds) {
  check_bounds(bounds);
  ExactValue result;
  result.pi_coefficient =
      poly.cosine_coefficient(0) * Rational(Int(bounds.p) + Int(bounds.q));
  for (const auto& [freq, coeffs] : poly.terms()) {
    if (freq == 0 || coeffs.sin == 0) {
      continue;
    }
    const int at_lower = odd(freq) && odd(bounds.q) ? -1 : 1;  // (-1)^(kq)
    const int at_upper = odd(freq) && odd(bounds.p) ? -1 : 1;  // (-1)^(kp)
    if (at_lower != at_upper) {
      result.constant += coeffs.sin * make_rational(at_lower - at_upper, freq);
    }
  }
  return result;
}

Count cosine_integral_count(const Instance& instance) {
  const ExactValue integral =
      exact_integral(expand_cos_product(instance), PiBounds{1, 0});
  if (integral.constant != 0) {
    throw std::logic_error(
        "cosine-product integral has a nonzero constant part: " +
        format_exact_value(integral));
  }
  const Rational scaled = integral.pi_coefficient * Rational(pow2(instance.n()));
  if (!is_integer(scaled) || scaled < 0) {
    throw std::logic_error(
        "cosine-product integral is not a nonnegative integer multiple of "
        "pi/2^n: " +
        format_exact_value(integral));
  }
  return scaled.get_num();
}

ExactValue integral_from_counts(const ProductSpec& spec,
                                const PiBounds& bounds) {
  if (spec.m == -1) {
    throw PreconditionError(
        "m = -1 is a pure cosine product; integrate it through the "
        "cosine-integral count engine instead");
  }
  validate_sine_cutoff(spec);
  check_bounds(bounds);
  if (odd(bounds.p + bounds.q)) {
    throw PreconditionError("the count-based closed form requires p + q "
                            "even, got p = " +
                            std::to_string(bounds.p) + ", q = " +
                            std::to_string(bounds.q));
  }
  const int residue = spec.m % 4;
  if (residue == 0 || residue == 2) {
    return ExactValue{};
  }
  const Count total = dp_count(spec.instance);
  const Count even_prefix = dp_parity_count(ParityQuery{spec.instance, spec.m});
  Int numerator = (Int(bounds.p) + Int(bounds.q)) * (2 * even_prefix - total);
  if (residue == 1) {
    numerator = -numerator;
  }
  return ExactValue{make_rational(numerator, pow2(spec.instance.n())),
                    Rational(0)};
}

}  // namespace signsum
