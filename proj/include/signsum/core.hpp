#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace signsum {

// Unbounded-width integer; counts and coefficient numerators outgrow 64
// bits quickly, so nothing in the exact path uses machine integers for
// results.
using Int = mpz_class;

// Nonnegative integer result of a counting engine.
using Count = mpz_class;

// Exact rational, always in lowest terms with positive denominator.
// mpq_class arithmetic preserves canonical form; construction goes
// through make_rational which canonicalizes.
using Rational = mpq_class;

// Error taxonomy mirrored by the CLI exit codes.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational make_rational(Int numerator, Int denominator = 1);

// Renders "p/q", omitting "/1" for whole values.
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

// Raises 2 to a nonnegative power exactly.
Int pow2(int exponent);

// A target-sum instance: target b0 plus coefficients b1..bn. Negative and
// zero entries are legal everywhere; n = 0 is legal (the empty assignment
// sums to 0).
struct Instance {
  std::int64_t target = 0;
  std::vector<std::int64_t> coeffs;

  int n() const { return static_cast<int>(coeffs.size()); }

  bool operator==(const Instance&) const = default;
};

// Sum of |bi| over the coefficient list (target excluded); bounds every
// achievable signed sum.
Int weight(const Instance& instance);

// Returns a copy with the target and the k-th coefficient (1-based)
// exchanged. The count of solutions is invariant under this exchange.
Instance swap_target(const Instance& instance, int k);

// A product of sines and cosines over the factors b0..bn: indices 0..m are
// sine factors, m+1..n cosine factors. Index 0 is the target. m = -1 means
// a pure cosine product.
struct ProductSpec {
  Instance instance;
  int m = -1;

  bool operator==(const ProductSpec&) const = default;
};

// Throws PreconditionError unless -1 <= m <= n.
void validate_sine_cutoff(const ProductSpec& spec);

// An assignment of +1/-1 to each coefficient.
struct SignVector {
  std::vector<std::int8_t> signs;

  // Bit i set means sign +1 for coefficient i+1.
  static SignVector from_mask(std::uint64_t mask, int n);

  // Sum of sign[i] * coeffs[i]; always within [-weight, weight].
  Int applied_sum(const Instance& instance) const;
};

// A closed-form value a*pi + b with exact rational a and b.
struct ExactValue {
  Rational pi_coefficient;
  Rational constant;

  double to_double() const;
  ExactValue scaled(const Rational& factor) const;

  friend ExactValue operator+(const ExactValue& lhs, const ExactValue& rhs);
  friend ExactValue operator-(const ExactValue& lhs, const ExactValue& rhs);
  bool operator==(const ExactValue&) const = default;
};

// Renders "a*pi + b" with zero components omitted ("1/4*pi", "2", "0").
std::string format_exact_value(const ExactValue& value);

// Parses the canonical instance text "b0; b1,b2,...,bn". Whitespace around
// tokens is ignored; the coefficient list may be empty ("7;"). Throws
// ParseError with the character position of the failure.
Instance parse_instance(const std::string& text);

// Canonical textual form, e.g. "0; 1,2,3" or "7;" for an empty list.
std::string format_instance(const Instance& instance);

}  // namespace signsum
