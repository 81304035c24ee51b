#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>

#include "malcev5/rational.hpp"

namespace malcev5 {

/// n! for n >= 0.
Integer factorial(std::int64_t n);

/// n (n-1) ... (n-k+1): 1 when k == 0 and 0 when k > n.
/// This is the coefficient produced by k-fold differentiation of x^n.
/// Requires n, k >= 0.
Integer falling_factorial(std::int64_t n, std::int64_t k);

/// n! / (i_1! ... i_r! (n - sum i)!).
///
/// Zero when some part is negative or the parts sum past n; these are the
/// conventions the structure-constant sums rely on to run over plain upper
/// limits. Also zero for n < 0.
Integer multinomial(std::int64_t n, std::span<const std::int64_t> parts);
Integer multinomial(std::int64_t n, std::initializer_list<std::int64_t> parts);

/// One-part multinomial.
Integer binomial(std::int64_t n, std::int64_t k);

/// Unsigned power of a small base.
Integer power(unsigned long base, unsigned long exponent);

}  // namespace malcev5
