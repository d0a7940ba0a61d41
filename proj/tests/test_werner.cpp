#include <doctest.h>

#include <cmath>
#include <numbers>

#include "signsum/rng.hpp"
#include "signsum/werner.hpp"

using namespace signsum;

namespace {

Instance make_instance(std::int64_t target, std::vector<std::int64_t> coeffs) {
  return Instance{target, std::move(coeffs)};
}

ProductSpec make_spec(std::int64_t target, std::vector<std::int64_t> coeffs,
                      int m) {
  return ProductSpec{make_instance(target, std::move(coeffs)), m};
}

double direct_product(const ProductSpec& spec, double x) {
  const Instance& instance = spec.instance;
  double value = spec.m >= 0
                     ? std::sin(static_cast<double>(instance.target) * x)
                     : std::cos(static_cast<double>(instance.target) * x);
  for (int i = 1; i <= instance.n(); ++i) {
    const double bx =
        static_cast<double>(instance.coeffs[static_cast<std::size_t>(i - 1)]) * x;
    value *= i <= spec.m ? std::sin(bx) : std::cos(bx);
  }
  return value;
}

void check_canonical(const TrigPolynomial& poly, int n) {
  const Int denominator_bound = pow2(n);
  for (const auto& [freq, coeffs] : poly.terms()) {
    CHECK(freq >= 0);
    CHECK((coeffs.cos != 0 || coeffs.sin != 0));
    if (freq == 0) {
      CHECK(coeffs.sin == 0);
    }
    CHECK(denominator_bound % coeffs.cos.get_den() == 0);
    CHECK(denominator_bound % coeffs.sin.get_den() == 0);
  }
}

}  // namespace

TEST_CASE("cosine products expand by product-to-sum folding") {
  const TrigPolynomial two_factor = expand_cos_product(make_instance(1, {2}));
  TrigPolynomial expected;
  expected.add_cos_term(1, make_rational(1, 2));
  expected.add_cos_term(3, make_rational(1, 2));
  CHECK(two_factor == expected);

  const TrigPolynomial empty = expand_cos_product(make_instance(0, {}));
  CHECK(empty == TrigPolynomial::constant(1));

  const TrigPolynomial squared = expand_cos_product(make_instance(1, {1}));
  TrigPolynomial expected_squared;
  expected_squared.add_cos_term(0, make_rational(1, 2));
  expected_squared.add_cos_term(2, make_rational(1, 2));
  CHECK(squared == expected_squared);
}

TEST_CASE("mixed products follow the classical two-factor identities") {
  const TrigPolynomial sin_cos = expand_mixed_product(make_spec(1, {1}, 0));
  TrigPolynomial expected_sin_cos;
  expected_sin_cos.add_sin_term(2, make_rational(1, 2));
  CHECK(sin_cos == expected_sin_cos);

  const TrigPolynomial sin_sin = expand_mixed_product(make_spec(1, {2}, 1));
  TrigPolynomial expected_sin_sin;
  expected_sin_sin.add_cos_term(1, make_rational(1, 2));
  expected_sin_sin.add_cos_term(3, make_rational(-1, 2));
  CHECK(sin_sin == expected_sin_sin);

  // All factors cosine when m = -1.
  const ProductSpec pure_cos = make_spec(1, {2}, -1);
  CHECK(expand_mixed_product(pure_cos) ==
        expand_cos_product(pure_cos.instance));
}

TEST_CASE("the sine cutoff is range checked") {
  CHECK_THROWS_AS(expand_mixed_product(make_spec(1, {2}, 2)),
                  PreconditionError);
  CHECK_THROWS_AS(expand_mixed_product(make_spec(1, {2}, -2)),
                  PreconditionError);
  CHECK_THROWS_AS(expand_by_enumeration(make_spec(1, {2}, 2)),
                  PreconditionError);
}

TEST_CASE("enumeration builds the same expansion") {
  const TrigPolynomial enumerated =
      expand_by_enumeration(make_spec(1, {2}, 1));
  TrigPolynomial expected;
  expected.add_cos_term(1, make_rational(1, 2));
  expected.add_cos_term(3, make_rational(-1, 2));
  CHECK(enumerated == expected);

  CHECK(expand_by_enumeration(make_spec(0, {5}, 0)).is_zero());

  const TrigPolynomial cos_path =
      expand_by_enumeration(make_spec(0, {1, 2, 3}, -1));
  CHECK(cos_path.cosine_coefficient(0) == make_rational(2, 8));
  CHECK(cos_path == expand_cos_product(make_instance(0, {1, 2, 3})));

  Instance big;
  big.coeffs.assign(26, 1);
  CHECK_THROWS_AS(expand_by_enumeration(ProductSpec{big, -1}),
                  ResourceLimitError);
}

TEST_CASE("folding and enumeration agree on random specs") {
  Rng rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const ProductSpec spec = random_spec(rng, 10, 9);
    const TrigPolynomial folded = expand_mixed_product(spec);
    CHECK(folded == expand_by_enumeration(spec));
    check_canonical(folded, spec.instance.n());
    CHECK(folded.coefficient_mass() <= 1);
    if (spec.m == -1) {
      CHECK(folded == expand_cos_product(spec.instance));
    }
  }
}

TEST_CASE("expansions evaluate to the direct product") {
  Rng rng(2025);
  for (int trial = 0; trial < 60; ++trial) {
    const ProductSpec spec = random_spec(rng, 10, 9);
    const TrigPolynomial poly = expand_mixed_product(spec);
    const double tolerance = 1e-12 * (spec.instance.n() + 1);
    for (int point = 0; point < 100; ++point) {
      const double x =
          rng.uniform_real(-std::numbers::pi, std::numbers::pi);
      CHECK(std::abs(evaluate_pointwise(poly, x) - direct_product(spec, x)) <=
            tolerance);
    }
  }
}

TEST_CASE("coefficient mass reaches 1 exactly when nothing cancels") {
  // Super-increasing coefficients keep every expansion frequency distinct
  // and positive, so no folding or cancellation occurs.
  const TrigPolynomial spread =
      expand_cos_product(make_instance(27, {1, 3, 9}));
  CHECK(spread.coefficient_mass() == 1);
  CHECK(spread.terms().size() == 8);

  // sin(x) sin(x) sin(2x) = 1/2 sin(2x) - 1/4 sin(4x): the colliding
  // frequencies cancel a quarter of the mass.
  const TrigPolynomial collided = expand_mixed_product(make_spec(1, {1, 2}, 2));
  CHECK(collided.coefficient_mass() == make_rational(3, 4));
}

TEST_CASE("a zero sine frequency annihilates the product") {
  CHECK(expand_mixed_product(make_spec(0, {5}, 0)).is_zero());
  CHECK(expand_mixed_product(make_spec(3, {0, 2}, 1)).is_zero());
  CHECK(expand_mixed_product(make_spec(3, {2, 0, 5}, 2)).is_zero());
  // A zero cosine frequency is just a factor of 1.
  CHECK(expand_mixed_product(make_spec(3, {2, 0}, -1)) ==
        expand_mixed_product(make_spec(3, {2}, -1)));
}

TEST_CASE("pointwise evaluation handles the named examples") {
  CHECK(evaluate_pointwise(TrigPolynomial::constant(1), 0.7) ==
        doctest::Approx(1.0).epsilon(1e-15));
  TrigPolynomial half_sin;
  half_sin.add_sin_term(2, make_rational(1, 2));
  CHECK(evaluate_pointwise(half_sin, std::numbers::pi / 4) ==
        doctest::Approx(0.5).epsilon(1e-14));
  const TrigPolynomial expansion = expand_cos_product(make_instance(1, {2}));
  CHECK(std::abs(evaluate_pointwise(expansion, 0.3) -
                 std::cos(0.3) * std::cos(0.6)) <= 1e-12);
}

TEST_CASE("latex rendering is deterministic and canonical") {
  const TrigPolynomial plus = expand_cos_product(make_instance(1, {2}));
  CHECK(emit_latex(plus) == "\\frac{1}{2}\\cos(x) + \\frac{1}{2}\\cos(3x)");
  CHECK(emit_latex(TrigPolynomial::zero()) == "0");
  const TrigPolynomial minus = expand_mixed_product(make_spec(1, {2}, 1));
  CHECK(emit_latex(minus) == "\\frac{1}{2}\\cos(x) - \\frac{1}{2}\\cos(3x)");
  const TrigPolynomial constant_pair =
      expand_cos_product(make_instance(1, {1}));
  CHECK(emit_latex(constant_pair) == "\\frac{1}{2} + \\frac{1}{2}\\cos(2x)");
  const TrigPolynomial sine = expand_mixed_product(make_spec(1, {1}, 0));
  CHECK(emit_latex(sine) == "\\frac{1}{2}\\sin(2x)");

  TrigPolynomial units;
  units.add_cos_term(2, Rational(1));
  units.add_sin_term(2, Rational(-1));
  units.add_cos_term(0, Rational(-3));
  CHECK(emit_latex(units) == "-3 + \\cos(2x) - \\sin(2x)");
}

TEST_CASE("json terms are sorted with exact rational strings") {
  const TrigPolynomial poly = expand_mixed_product(make_spec(1, {2}, 1));
  CHECK(terms_to_json(poly).dump() ==
        R"([{"freq":1,"cos":"1/2","sin":"0"},{"freq":3,"cos":"-1/2","sin":"0"}])");
  CHECK(terms_to_json(TrigPolynomial::zero()).dump() == "[]");
}

TEST_CASE("multiplying by constant-frequency factors degenerates cleanly") {
  const TrigPolynomial base = expand_cos_product(make_instance(1, {2}));
  CHECK(base.multiplied_by_cos(0) == base);
  CHECK(base.multiplied_by_sin(0).is_zero());
}

TEST_CASE("negative frequencies fold into canonical form") {
  TrigPolynomial poly;
  poly.add_cos_term(-3, make_rational(1, 4));
  poly.add_sin_term(-3, make_rational(1, 4));
  CHECK(poly.cosine_coefficient(3) == make_rational(1, 4));
  CHECK(poly.sine_coefficient(3) == make_rational(-1, 4));
  CHECK(poly.sine_coefficient(-3) == make_rational(1, 4));
  poly.add_sin_term(0, Rational(5));  // discarded, sin(0x) = 0
  CHECK(poly.sine_coefficient(0) == 0);
  poly.add_cos_term(3, make_rational(-1, 4));  // cancels to a sine-only term
  CHECK(poly.cosine_coefficient(3) == 0);
  CHECK(!poly.is_zero());
  poly.add_sin_term(3, make_rational(1, 4));  // cancels the whole term
  CHECK(poly.is_zero());
}

TEST_CASE("expansions refuse to exceed the term budget") {
  TrigPolynomial poly;
  const auto flood = [&] {
    for (std::int64_t freq = 1; freq <= (1 << 20) + 1; ++freq) {
      poly.add_cos_term(freq, Rational(1));
    }
  };
  CHECK_THROWS_AS(flood(), ResourceLimitError);
}
