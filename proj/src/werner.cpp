#include "signsum/werner.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace signsum {

namespace {

const Rational kHalf = make_rational(1, 2);

std::int64_t checked_freq_sum(std::int64_t a, std::int64_t b) {
  const __int128 sum = static_cast<__int128>(a) + b;
  if (sum > std::numeric_limits<std::int64_t>::max() ||
      sum < std::numeric_limits<std::int64_t>::min()) {
    throw ResourceLimitError("term frequency exceeds the 64-bit range");
  }
  return static_cast<std::int64_t>(sum);
}

}  // namespace

TrigPolynomial TrigPolynomial::constant(const Rational& value) {
  TrigPolynomial poly;
  poly.add_cos_term(0, value);
  return poly;
}

void TrigPolynomial::check_term_budget() const {
  if (terms_.size() > kMaxDistinctFrequencies) {
    throw ResourceLimitError(
        "expansion exceeds " + std::to_string(kMaxDistinctFrequencies) +
        " distinct frequencies");
  }
}

void TrigPolynomial::add_cos_term(std::int64_t freq, const Rational& coef) {
  if (coef == 0) {
    return;
  }
  if (freq < 0) {
    freq = -freq;  // cos(-kx) = cos(kx)
  }
  auto it = terms_.try_emplace(freq).first;
  it->second.cos += coef;
  if (it->second.cos == 0 && it->second.sin == 0) {
    terms_.erase(it);
  } else {
    check_term_budget();
  }
}

void TrigPolynomial::add_sin_term(std::int64_t freq, const Rational& coef) {
  if (coef == 0 || freq == 0) {
    return;  // sin(0x) = 0
  }
  Rational folded = coef;
  if (freq < 0) {
    freq = -freq;  // sin(-kx) = -sin(kx)
    folded = -folded;
  }
  auto it = terms_.try_emplace(freq).first;
  it->second.sin += folded;
  if (it->second.cos == 0 && it->second.sin == 0) {
    terms_.erase(it);
  } else {
    check_term_budget();
  }
}

TrigPolynomial TrigPolynomial::multiplied_by_cos(std::int64_t freq) const {
  TrigPolynomial result;
  for (const auto& [k, coeffs] : terms_) {
    const std::int64_t below = checked_freq_sum(k, -freq);
    const std::int64_t above = checked_freq_sum(k, freq);
    if (coeffs.cos != 0) {
      // cos(kx) cos(fx) = 1/2 [cos((k-f)x) + cos((k+f)x)]
      const Rational half = coeffs.cos * kHalf;
      result.add_cos_term(below, half);
      result.add_cos_term(above, half);
    }
    if (coeffs.sin != 0) {
      // sin(kx) cos(fx) = 1/2 [sin((k-f)x) + sin((k+f)x)]
      const Rational half = coeffs.sin * kHalf;
      result.add_sin_term(below, half);
      result.add_sin_term(above, half);
    }
  }
  return result;
}

TrigPolynomial TrigPolynomial::multiplied_by_sin(std::int64_t freq) const {
  TrigPolynomial result;
  for (const auto& [k, coeffs] : terms_) {
    const std::int64_t below = checked_freq_sum(k, -freq);
    const std::int64_t above = checked_freq_sum(k, freq);
    if (coeffs.cos != 0) {
      // cos(kx) sin(fx) = 1/2 [sin((k+f)x) - sin((k-f)x)]
      const Rational half = coeffs.cos * kHalf;
      result.add_sin_term(above, half);
      result.add_sin_term(below, -half);
    }
    if (coeffs.sin != 0) {
      // sin(kx) sin(fx) = 1/2 [cos((k-f)x) - cos((k+f)x)]
      const Rational half = coeffs.sin * kHalf;
      result.add_cos_term(below, half);
      result.add_cos_term(above, -half);
    }
  }
  return result;
}

void TrigPolynomial::scale(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return;
  }
  for (auto& [k, coeffs] : terms_) {
    coeffs.cos *= factor;
    coeffs.sin *= factor;
  }
}

Rational TrigPolynomial::cosine_coefficient(std::int64_t freq) const {
  const auto it = terms_.find(freq < 0 ? -freq : freq);
  return it == terms_.end() ? Rational(0) : it->second.cos;
}

Rational TrigPolynomial::sine_coefficient(std::int64_t freq) const {
  if (freq == 0) {
    return Rational(0);
  }
  const auto it = terms_.find(freq < 0 ? -freq : freq);
  if (it == terms_.end()) {
    return Rational(0);
  }
  return freq < 0 ? Rational(-it->second.sin) : it->second.sin;
}

std::int64_t TrigPolynomial::max_frequency() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

Rational TrigPolynomial::coefficient_mass() const {
  Rational mass = 0;
  for (const auto& [k, coeffs] : terms_) {
    mass += abs(coeffs.cos);
    mass += abs(coeffs.sin);
  }
  return mass;
}

double TrigPolynomial::evaluate(double x) const {
  double value = 0.0;
  for (const auto& [k, coeffs] : terms_) {
    const double kx = static_cast<double>(k) * x;
    if (coeffs.cos != 0) {
      value += coeffs.cos.get_d() * std::cos(kx);
    }
    if (coeffs.sin != 0) {
      value += coeffs.sin.get_d() * std::sin(kx);
    }
  }
  return value;
}

TrigPolynomial expand_cos_product(const Instance& instance) {
  TrigPolynomial poly = TrigPolynomial::constant(1);
  poly = poly.multiplied_by_cos(instance.target);
  for (std::int64_t coeff : instance.coeffs) {
    poly = poly.multiplied_by_cos(coeff);
  }
  return poly;
}

TrigPolynomial expand_mixed_product(const ProductSpec& spec) {
  validate_sine_cutoff(spec);
  const Instance& instance = spec.instance;
  TrigPolynomial poly = TrigPolynomial::constant(1);
  poly = spec.m >= 0 ? poly.multiplied_by_sin(instance.target)
                     : poly.multiplied_by_cos(instance.target);
  for (int i = 1; i <= instance.n(); ++i) {
    const std::int64_t coeff = instance.coeffs[static_cast<std::size_t>(i - 1)];
    poly = i <= spec.m ? poly.multiplied_by_sin(coeff)
                       : poly.multiplied_by_cos(coeff);
  }
  if (werner_testing::flip_mixed_sign && spec.m >= 0) {
    poly.scale(-1);
  }
  return poly;
}

TrigPolynomial expand_by_enumeration(const ProductSpec& spec,
                                     int enumeration_cap) {
  validate_sine_cutoff(spec);
  const Instance& instance = spec.instance;
  const int n = instance.n();
  if (n > enumeration_cap) {
    throw ResourceLimitError("enumeration engines are limited to n <= " +
                             std::to_string(enumeration_cap) +
                             " (cap), got n = " + std::to_string(n));
  }
  const int m = spec.m;
  const bool cosine_typed = m % 2 != 0;  // covers m = -1
  const std::uint64_t prefix_mask =
      m >= 1 ? (std::uint64_t{1} << m) - 1 : 0;
  TrigPolynomial poly;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    __int128 freq = instance.target;
    for (int i = 0; i < n; ++i) {
      const std::int64_t coeff = instance.coeffs[static_cast<std::size_t>(i)];
      freq += (mask >> i) & 1u ? coeff : -coeff;
    }
    if (freq > std::numeric_limits<std::int64_t>::max() ||
        freq < std::numeric_limits<std::int64_t>::min()) {
      throw ResourceLimitError("term frequency exceeds the 64-bit range");
    }
    // prod_{j=1..m} e_j = (-1)^(number of -1 signs in the prefix)
    const int prefix_minuses =
        m >= 1 ? m - __builtin_popcountll(mask & prefix_mask) : 0;
    const Rational term_weight =
        prefix_minuses % 2 != 0 ? Rational(-1) : Rational(1);
    if (cosine_typed) {
      poly.add_cos_term(static_cast<std::int64_t>(freq), term_weight);
    } else {
      poly.add_sin_term(static_cast<std::int64_t>(freq), term_weight);
    }
  }
  const int sign = ((m + 1) / 2) % 2 != 0 ? -1 : 1;
  poly.scale(make_rational(sign, pow2(n)));
  return poly;
}

double evaluate_pointwise(const TrigPolynomial& poly, double x) {
  return poly.evaluate(x);
}

namespace {

// Coefficient magnitude in front of a trig factor; empty means 1.
std::string latex_magnitude(const Rational& coef, bool standalone) {
  const Rational magnitude = abs(coef);
  if (magnitude.get_den() == 1) {
    if (magnitude == 1 && !standalone) {
      return "";
    }
    return magnitude.get_num().get_str();
  }
  return "\\frac{" + magnitude.get_num().get_str() + "}{" +
         magnitude.get_den().get_str() + "}";
}

std::string latex_argument(std::int64_t freq) {
  return freq == 1 ? "x" : std::to_string(freq) + "x";
}

void append_latex_term(std::string& out, const Rational& coef,
                       const std::string& body) {
  if (out.empty()) {
    if (coef < 0) {
      out += "-";
    }
  } else {
    out += coef < 0 ? " - " : " + ";
  }
  out += latex_magnitude(coef, body.empty()) + body;
}

}  // namespace

std::string emit_latex(const TrigPolynomial& poly) {
  if (poly.is_zero()) {
    return "0";
  }
  std::string out;
  for (const auto& [freq, coeffs] : poly.terms()) {
    if (coeffs.cos != 0) {
      append_latex_term(out, coeffs.cos,
                        freq == 0 ? "" : "\\cos(" + latex_argument(freq) + ")");
    }
    if (coeffs.sin != 0) {
      append_latex_term(out, coeffs.sin, "\\sin(" + latex_argument(freq) + ")");
    }
  }
  return out;
}

nlohmann::ordered_json terms_to_json(const TrigPolynomial& poly) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [freq, coeffs] : poly.terms()) {
    terms.push_back({{"freq", freq},
                     {"cos", format_rational(coeffs.cos)},
                     {"sin", format_rational(coeffs.sin)}});
  }
  return terms;
}

}  // namespace signsum
