#include "dyck/numeric.hpp"

#include "dyck/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace dyck {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto numerator = text.substr(0, slash);
  const auto denominator = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(numerator) || !is_integer_literal(denominator) ||
      denominator.front() == '-' || denominator.front() == '+') {
    throw ParseError("not an exact rational (expected p/q): '" + std::string(text) + "'");
  }
  const Integer den{std::string(denominator)};
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  std::string num_text(numerator);
  if (num_text.front() == '+') num_text.erase(0, 1);
  return Rational(Integer{num_text}, den);
}

std::string to_fraction_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_decimal_string(double x, int significant_digits) {
  significant_digits = std::clamp(significant_digits, 1, 17);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, x);
  return buf;
}

std::string to_decimal_string(const Rational& q, int significant_digits) {
  return to_decimal_string(q.convert_to<double>(), significant_digits);
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.backend().data(), n, k);
  return r;
}

Integer power(unsigned base, unsigned exponent) {
  Integer r;
  mpz_ui_pow_ui(r.backend().data(), base, exponent);
  return r;
}

}  // namespace dyck
