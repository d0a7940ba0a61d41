#include <doctest.h>

#include "signsum/core.hpp"
#include "signsum/rng.hpp"

using namespace signsum;

namespace {

Instance make_instance(std::int64_t target, std::vector<std::int64_t> coeffs) {
  return Instance{target, std::move(coeffs)};
}

}  // namespace

TEST_CASE("swap_target exchanges the target with one coefficient") {
  const Instance start = make_instance(0, {1, 2, 3});
  const Instance expected = make_instance(3, {1, 2, 0});
  CHECK(swap_target(start, 3) == expected);

  const Instance symmetric = make_instance(5, {5});
  CHECK(swap_target(symmetric, 1) == symmetric);

  const Instance equal_entry = make_instance(2, {1, 2, 3});
  CHECK(swap_target(equal_entry, 2) == equal_entry);

  const Instance untouched = make_instance(0, {1, 2, 3});
  CHECK(start == untouched);
}

TEST_CASE("swap_target rejects out-of-range indices") {
  const Instance instance = make_instance(0, {1, 2, 3});
  CHECK_THROWS_AS(swap_target(instance, 0), PreconditionError);
  CHECK_THROWS_AS(swap_target(instance, 4), PreconditionError);
  const Instance empty = make_instance(7, {});
  CHECK_THROWS_AS(swap_target(empty, 1), PreconditionError);
}

TEST_CASE("swap_target is an involution") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance instance = random_instance(rng, 8, 9);
    for (int k = 1; k <= instance.n(); ++k) {
      CHECK(swap_target(swap_target(instance, k), k) == instance);
    }
  }
}

TEST_CASE("weight sums absolute coefficients, target excluded") {
  CHECK(weight(make_instance(0, {1, 2, 3})) == 6);
  CHECK(weight(make_instance(7, {})) == 0);
  CHECK(weight(make_instance(0, {-4, 0, 4})) == 8);
}

TEST_CASE("rationals stay canonical through arithmetic") {
  const Rational half = make_rational(2, 4);
  CHECK(half.get_num() == 1);
  CHECK(half.get_den() == 2);
  const Rational negative = make_rational(3, -6);
  CHECK(negative.get_num() == -1);
  CHECK(negative.get_den() == 2);
  CHECK_THROWS_AS(make_rational(1, 0), PreconditionError);

  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = make_rational(rng.uniform(-50, 50), rng.uniform(1, 40));
    Rational b = make_rational(rng.uniform(-50, 50), rng.uniform(1, 40));
    CHECK((a + b) - b == a);
    if (b == 0) {
      b = make_rational(1, 3);
    }
    CHECK((a * b) / b == a);
    const Rational sum = a + b;
    Int gcd;
    mpz_gcd(gcd.get_mpz_t(), sum.get_num().get_mpz_t(),
            sum.get_den().get_mpz_t());
    CHECK(gcd == 1);
    CHECK(sum.get_den() > 0);
  }
}

TEST_CASE("rational formatting omits /1") {
  CHECK(format_rational(make_rational(1, 2)) == "1/2");
  CHECK(format_rational(make_rational(-1, 2)) == "-1/2");
  CHECK(format_rational(make_rational(6, 3)) == "2");
  CHECK(format_rational(Rational(0)) == "0");
}

TEST_CASE("exact values add and scale componentwise") {
  const ExactValue a{make_rational(1, 4), make_rational(-1, 3)};
  const ExactValue b{make_rational(3, 4), make_rational(1, 3)};
  const ExactValue one_pi{Rational(1), Rational(0)};
  CHECK(a + b == one_pi);
  CHECK(a - a == ExactValue{});
  const ExactValue scaled{Rational(1), make_rational(-4, 3)};
  CHECK(a.scaled(make_rational(4, 1)) == scaled);
  CHECK(a + b == b + a);
  const ExactValue c{make_rational(-2, 7), make_rational(5, 9)};
  CHECK((a + b) + c == a + (b + c));
  const ExactValue two_pi{Rational(2), Rational(0)};
  CHECK(two_pi.to_double() ==
        doctest::Approx(6.283185307179586).epsilon(1e-15));
}

TEST_CASE("exact value rendering omits zero components") {
  CHECK(format_exact_value(ExactValue{}) == "0");
  const ExactValue quarter_pi{make_rational(1, 4), Rational(0)};
  CHECK(format_exact_value(quarter_pi) == "1/4*pi");
  const ExactValue plain_two{Rational(0), Rational(2)};
  CHECK(format_exact_value(plain_two) == "2");
  const ExactValue mixed{Rational(2), make_rational(-1, 2)};
  CHECK(format_exact_value(mixed) == "2*pi - 1/2");
  const ExactValue negative{make_rational(-1, 8), Rational(3)};
  CHECK(format_exact_value(negative) == "-1/8*pi + 3");
}

TEST_CASE("sign vectors apply componentwise") {
  const Instance instance = make_instance(0, {1, -2, 3});
  const SignVector all_plus = SignVector::from_mask(0b111, 3);
  CHECK(all_plus.applied_sum(instance) == 2);
  const SignVector mixed = SignVector::from_mask(0b101, 3);
  CHECK(mixed.applied_sum(instance) == 6);
  CHECK(abs(mixed.applied_sum(instance)) <= weight(instance));
  const SignVector wrong_length = SignVector::from_mask(0, 2);
  CHECK_THROWS_AS(wrong_length.applied_sum(instance), PreconditionError);
}

TEST_CASE("instance text parses and formats canonically") {
  const Instance basic = make_instance(0, {1, 2, 3});
  CHECK(parse_instance("0; 1,2,3") == basic);
  const Instance messy = make_instance(-7, {10, -20, 0});
  CHECK(parse_instance("  -7 ;  10 , -20 ,0 ") == messy);
  const Instance empty = make_instance(7, {});
  CHECK(parse_instance("7; ") == empty);
  CHECK(parse_instance("7;") == empty);
  const Instance plus_signs = make_instance(5, {1, -1});
  CHECK(parse_instance("+5; +1,-1") == plus_signs);
  CHECK(format_instance(basic) == "0; 1,2,3");
  CHECK(format_instance(empty) == "7;");
  const Instance negatives = make_instance(-3, {0, -9, 8});
  CHECK(parse_instance(format_instance(negatives)) == negatives);
}

TEST_CASE("instance parse failures carry a position") {
  CHECK_THROWS_WITH_AS(parse_instance("a; 1"),
                       "expected target integer at position 0", ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("1, 2"),
                       "expected ';' after target at position 1", ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("0; 1,,2"),
                       "expected coefficient at position 5", ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("0; 1,"),
                       "expected coefficient after ',' at position 5",
                       ParseError);
  CHECK_THROWS_AS(parse_instance("0; 99999999999999999999"), ParseError);
  CHECK_THROWS_AS(parse_instance(""), ParseError);
}
