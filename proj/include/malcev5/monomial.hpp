#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "malcev5/malcev.hpp"

namespace malcev5 {

using Exponent = std::uint32_t;
using ExponentTuple = std::array<Exponent, kDimension>;

/// Left-tapped basis monomial a^i b^j c^k d^l e^m of U(M).
///
/// Through the linear isomorphism U(M) -> P(M) it is also the commutative
/// monomial of the polynomial algebra; the empty tuple is the unit 1.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(const ExponentTuple& exps) : exps_(exps) {}
  constexpr Monomial(Exponent i, Exponent j, Exponent k, Exponent l, Exponent m)
      : exps_{i, j, k, l, m} {}

  static constexpr Monomial generator(Letter v) {
    Monomial out;
    out.exps_[index_of(v)] = 1;
    return out;
  }

  constexpr Exponent operator[](Letter v) const { return exps_[index_of(v)]; }
  constexpr Exponent operator[](std::size_t i) const { return exps_[i]; }
  constexpr const ExponentTuple& exponents() const { return exps_; }

  constexpr std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (Exponent x : exps_) d += x;
    return d;
  }
  constexpr bool is_unit() const { return degree() == 0; }

  /// Smallest letter with a nonzero exponent: the outermost factor f of the
  /// left-tapped product f(...).
  std::optional<Letter> leading_letter() const;

  /// The monomial with one factor of `v` removed. Requires (*this)[v] > 0.
  Monomial without(Letter v) const;
  /// The monomial with one more factor of `v`.
  Monomial with(Letter v) const;
  /// Exponent-wise sum.
  Monomial concatenated(const Monomial& other) const;

  /// Lexicographic on (i, j, k, l, m).
  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  ExponentTuple exps_{};
};

/// Canonical display order: higher degree first, then lexicographically
/// larger exponent tuples first.
struct DisplayOrder {
  bool operator()(const Monomial& x, const Monomial& y) const {
    const auto dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx > dy;
    return x > y;
  }
};

/// Every monomial of degree <= max_degree, sorted by ascending degree and,
/// within a degree, by descending exponent tuple (a^n first).
std::vector<Monomial> monomials_up_to_degree(unsigned max_degree);

/// Monomials in the letters c, d, e only, of degree <= max_degree.
std::vector<Monomial> cde_monomials_up_to_degree(unsigned max_degree);

/// Text form such as "abcd^2e"; the unit prints as "1".
std::string to_string(const Monomial& x);

}  // namespace malcev5
