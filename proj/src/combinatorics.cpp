#include "malcev5/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace malcev5 {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Integer factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative integer");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer falling_factorial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw std::invalid_argument("falling_factorial needs n, k >= 0");
  if (k > n) return 0;
  Integer out = 1;
  for (std::int64_t f = n - k + 1; f <= n; ++f) out *= static_cast<unsigned long>(f);
  return out;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer multinomial(std::int64_t n, std::span<const std::int64_t> parts) {
  if (n < 0) return 0;
  std::int64_t rest = n;
  for (std::int64_t part : parts) {
    if (part < 0 || part > rest) return 0;
    rest -= part;
  }
  // n! / (i_1! ... i_r! rest!) as a product of binomials C(remaining, i_t).
  Integer out = 1;
  std::int64_t remaining = n;
  for (std::int64_t part : parts) {
    out *= binomial(remaining, part);
    remaining -= part;
  }
  return out;
}

Integer multinomial(std::int64_t n, std::initializer_list<std::int64_t> parts) {
  return multinomial(n, std::span<const std::int64_t>(parts.begin(), parts.size()));
}

Integer power(unsigned long base, unsigned long exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

}  // namespace malcev5
