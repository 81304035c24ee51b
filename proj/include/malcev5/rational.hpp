#pragma once

#include <gmpxx.h>

#include <string>

namespace malcev5 {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number; GMP keeps every arithmetic result in lowest terms
/// with a positive denominator.
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error when den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den = 1);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace malcev5
