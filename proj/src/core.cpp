#include "signsum/core.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace signsum {

Rational make_rational(Int numerator, Int denominator) {
  if (denominator == 0) {
    throw PreconditionError("rational denominator must be nonzero");
  }
  Rational value;
  value.get_num() = std::move(numerator);
  value.get_den() = std::move(denominator);
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) {
  std::string text = value.get_num().get_str();
  if (value.get_den() != 1) {
    text += "/" + value.get_den().get_str();
  }
  return text;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Int pow2(int exponent) {
  if (exponent < 0) {
    throw PreconditionError("pow2 exponent must be nonnegative");
  }
  Int result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, static_cast<unsigned long>(exponent));
  return result;
}

Int weight(const Instance& instance) {
  Int total = 0;
  for (std::int64_t coeff : instance.coeffs) {
    total += abs(Int(coeff));
  }
  return total;
}

Instance swap_target(const Instance& instance, int k) {
  if (k < 1 || k > instance.n()) {
    throw PreconditionError("swap index must be in 1.." +
                            std::to_string(instance.n()) + ", got " +
                            std::to_string(k));
  }
  Instance result = instance;
  result.target = instance.coeffs[static_cast<std::size_t>(k - 1)];
  result.coeffs[static_cast<std::size_t>(k - 1)] = instance.target;
  return result;
}

void validate_sine_cutoff(const ProductSpec& spec) {
  if (spec.m < -1 || spec.m > spec.instance.n()) {
    throw PreconditionError("sine cutoff m must be in -1.." +
                            std::to_string(spec.instance.n()) + ", got " +
                            std::to_string(spec.m));
  }
}

SignVector SignVector::from_mask(std::uint64_t mask, int n) {
  SignVector result;
  result.signs.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    result.signs[static_cast<std::size_t>(i)] =
        (mask >> i) & 1u ? std::int8_t{1} : std::int8_t{-1};
  }
  return result;
}

Int SignVector::applied_sum(const Instance& instance) const {
  if (signs.size() != instance.coeffs.size()) {
    throw PreconditionError("sign vector length " +
                            std::to_string(signs.size()) +
                            " does not match instance length " +
                            std::to_string(instance.coeffs.size()));
  }
  Int sum = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] > 0) {
      sum += Int(instance.coeffs[i]);
    } else {
      sum -= Int(instance.coeffs[i]);
    }
  }
  return sum;
}

double ExactValue::to_double() const {
  return pi_coefficient.get_d() * std::numbers::pi + constant.get_d();
}

ExactValue ExactValue::scaled(const Rational& factor) const {
  return ExactValue{pi_coefficient * factor, constant * factor};
}

ExactValue operator+(const ExactValue& lhs, const ExactValue& rhs) {
  return ExactValue{lhs.pi_coefficient + rhs.pi_coefficient,
                    lhs.constant + rhs.constant};
}

ExactValue operator-(const ExactValue& lhs, const ExactValue& rhs) {
  return ExactValue{lhs.pi_coefficient - rhs.pi_coefficient,
                    lhs.constant - rhs.constant};
}

std::string format_exact_value(const ExactValue& value) {
  const bool has_pi = value.pi_coefficient != 0;
  const bool has_constant = value.constant != 0;
  if (!has_pi && !has_constant) {
    return "0";
  }
  std::string text;
  if (has_pi) {
    text = format_rational(value.pi_coefficient) + "*pi";
    if (has_constant) {
      if (value.constant < 0) {
        text += " - " + format_rational(Rational(-value.constant));
      } else {
        text += " + " + format_rational(value.constant);
      }
    }
    return text;
  }
  return format_rational(value.constant);
}

namespace {

[[noreturn]] void parse_fail(const std::string& what, std::size_t position) {
  throw ParseError(what + " at position " + std::to_string(position));
}

std::size_t skip_spaces(const std::string& text, std::size_t pos) {
  while (pos < text.size() &&
         std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  return pos;
}

std::int64_t parse_int64(const std::string& text, std::size_t& pos,
                         const char* what) {
  pos = skip_spaces(text, pos);
  const char* begin = text.data() + pos;
  const char* end = text.data() + text.size();
  std::int64_t value = 0;
  // from_chars accepts a leading '-' but not '+'.
  const char* start = begin;
  if (start != end && *start == '+') {
    ++start;
  }
  auto [ptr, ec] = std::from_chars(start, end, value);
  if (ec == std::errc::result_out_of_range) {
    parse_fail(std::string(what) + " out of 64-bit range", pos);
  }
  if (ec != std::errc() || ptr == start) {
    parse_fail(std::string("expected ") + what, pos);
  }
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  Instance instance;
  std::size_t pos = 0;
  instance.target = parse_int64(text, pos, "target integer");
  pos = skip_spaces(text, pos);
  if (pos >= text.size() || text[pos] != ';') {
    parse_fail("expected ';' after target", pos);
  }
  ++pos;
  pos = skip_spaces(text, pos);
  while (pos < text.size()) {
    instance.coeffs.push_back(parse_int64(text, pos, "coefficient"));
    pos = skip_spaces(text, pos);
    if (pos == text.size()) {
      break;
    }
    if (text[pos] != ',') {
      parse_fail("expected ',' between coefficients", pos);
    }
    ++pos;
    pos = skip_spaces(text, pos);
    if (pos == text.size()) {
      parse_fail("expected coefficient after ','", pos);
    }
  }
  return instance;
}

std::string format_instance(const Instance& instance) {
  std::ostringstream out;
  out << instance.target << ";";
  for (std::size_t i = 0; i < instance.coeffs.size(); ++i) {
    out << (i == 0 ? " " : ",") << instance.coeffs[i];
  }
  return out.str();
}

}  // namespace signsum
