#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>

#include "malcev5/rational.hpp"

namespace malcev5 {

/// Finite rational linear combination of basis keys.
///
/// No stored coefficient is ever zero, so two combinations are equal exactly
/// when their term maps are equal.
template <typename Basis, typename Order = std::less<Basis>>
class LinearCombination {
 public:
  using TermMap = std::map<Basis, Rational, Order>;

  LinearCombination() = default;
  explicit LinearCombination(const Basis& key, const Rational& coeff = 1) { add_term(key, coeff); }

  void add_term(const Basis& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Basis& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [key, coeff] : other.terms_) add_term(key, coeff);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [key, coeff] : other.terms_) add_term(key, -coeff);
    return *this;
  }
  LinearCombination& operator*=(const Rational& scalar) {
    if (scalar == 0) {
      terms_.clear();
    } else {
      for (auto& [key, coeff] : terms_) coeff *= scalar;
    }
    return *this;
  }

  /// Adds scalar * other without materializing the scaled copy.
  void add_scaled(const Rational& scalar, const LinearCombination& other) {
    if (scalar == 0) return;
    for (const auto& [key, coeff] : other.terms_) add_term(key, scalar * coeff);
  }

  friend LinearCombination operator+(LinearCombination x, const LinearCombination& y) { return x += y; }
  friend LinearCombination operator-(LinearCombination x, const LinearCombination& y) { return x -= y; }
  friend LinearCombination operator-(LinearCombination x) { return x *= Rational(-1); }
  friend LinearCombination operator*(const Rational& s, LinearCombination x) { return x *= s; }
  friend bool operator==(const LinearCombination& x, const LinearCombination& y) {
    return x.terms_ == y.terms_;
  }

 private:
  TermMap terms_;
};

}  // namespace malcev5
