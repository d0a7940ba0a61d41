#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "signsum/core.hpp"
#include "signsum/counting.hpp"

namespace signsum {

// Expansions refuse to grow past this many distinct frequencies instead of
// degrading.
inline constexpr std::size_t kMaxDistinctFrequencies = std::size_t{1} << 20;

// A finite sum of a_k cos(kx) + s_k sin(kx) with integer frequencies
// k >= 0 and exact rational coefficients. Canonical form throughout:
// negative frequencies are folded via cos(-kx) = cos(kx) and
// sin(-kx) = -sin(kx), the sine coefficient at frequency 0 is never
// stored (sin 0 = 0), and no stored term has both coefficients zero.
// Structural equality on the term map is therefore pointwise equality.
class TrigPolynomial {
 public:
  struct Coeffs {
    Rational cos;
    Rational sin;

    bool operator==(const Coeffs&) const = default;
  };

  static TrigPolynomial zero() { return TrigPolynomial{}; }
  static TrigPolynomial constant(const Rational& value);

  // Adds coef * cos(freq * x) resp. coef * sin(freq * x); freq may be any
  // signed integer, folding keeps the stored form canonical.
  void add_cos_term(std::int64_t freq, const Rational& coef);
  void add_sin_term(std::int64_t freq, const Rational& coef);

  // Pointwise product with cos(freq * x) / sin(freq * x) via the two-term
  // product-to-sum identities.
  TrigPolynomial multiplied_by_cos(std::int64_t freq) const;
  TrigPolynomial multiplied_by_sin(std::int64_t freq) const;

  void scale(const Rational& factor);

  const std::map<std::int64_t, Coeffs>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational cosine_coefficient(std::int64_t freq) const;
  Rational sine_coefficient(std::int64_t freq) const;
  std::int64_t max_frequency() const;

  // Sum of |coefficients|; at most 1 for any product expansion.
  Rational coefficient_mass() const;

  double evaluate(double x) const;

  bool operator==(const TrigPolynomial&) const = default;

 private:
  std::map<std::int64_t, Coeffs> terms_;

  void check_term_budget() const;
};

// Exact expansion of cos(b0 x) * cos(b1 x) * ... * cos(bn x), built by
// folding one factor at a time.
TrigPolynomial expand_cos_product(const Instance& instance);

// Exact expansion of the mixed product sin(b0 x)..sin(bm x) *
// cos(b_{m+1} x)..cos(bn x) by the same iterated folding. m = -1 yields
// exactly expand_cos_product(instance).
TrigPolynomial expand_mixed_product(const ProductSpec& spec);

// Independent construction of the same expansion by direct summation over
// all 2^n sign vectors: term frequency b0 + e1 b1 + ... + en bn, weight
// prod_{j=1..m} e_j, global factor (-1)^floor((m+1)/2) / 2^n, cosine-typed
// for odd m and sine-typed for even m. Exists to cross-check the sign
// conventions of the folding path.
TrigPolynomial expand_by_enumeration(const ProductSpec& spec,
                                     int enumeration_cap = kDefaultEnumerationCap);

double evaluate_pointwise(const TrigPolynomial& poly, double x);

// Deterministic LaTeX: terms ascending by frequency, cosine before sine at
// equal frequency, rationals as \frac; the zero polynomial prints "0".
std::string emit_latex(const TrigPolynomial& poly);

// Array of {"freq": k, "cos": "p/q", "sin": "p/q"} sorted by frequency,
// rationals as exact strings.
nlohmann::ordered_json terms_to_json(const TrigPolynomial& poly);

namespace werner_testing {

// Test-only fault hook: negates the mixed expansion whenever a sine factor
// is present, so the cross-check battery has a deliberate defect to catch.
inline bool flip_mixed_sign = false;

}  // namespace werner_testing

}  // namespace signsum
