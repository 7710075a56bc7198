#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace dyck {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Parses "p/q" or "p" (optionally signed). Decimal notation is rejected so
/// that callers never silently round.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_fraction_string(const Rational& q);

std::string to_decimal_string(const Rational& q, int significant_digits = 12);
std::string to_decimal_string(double x, int significant_digits = 12);

Integer binomial(unsigned n, unsigned k);
Integer power(unsigned base, unsigned exponent);

}  // namespace dyck
