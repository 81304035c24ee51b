#include "malcev5/malcev.hpp"

namespace malcev5 {

std::optional<Letter> letter_from_char(char ch) {
  if (ch < 'a' || ch > 'e') return std::nullopt;
  return letter_at(static_cast<std::size_t>(ch - 'a'));
}

MalcevVector MalcevVector::basis(Letter v) {
  MalcevVector out;
  out[v] = 1;
  return out;
}

bool MalcevVector::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

MalcevVector& MalcevVector::operator+=(const MalcevVector& other) {
  for (std::size_t i = 0; i < kDimension; ++i) coords_[i] += other.coords_[i];
  return *this;
}

MalcevVector& MalcevVector::operator-=(const MalcevVector& other) {
  for (std::size_t i = 0; i < kDimension; ++i) coords_[i] -= other.coords_[i];
  return *this;
}

MalcevVector& MalcevVector::operator*=(const Rational& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

MalcevVector bracket_m(const MalcevVector& x, const MalcevVector& y) {
  using enum Letter;
  MalcevVector out;
  out[c] = x[a] * y[b] - x[b] * y[a];
  out[e] = x[c] * y[d] - x[d] * y[c];
  return out;
}

std::optional<std::pair<int, Letter>> bracket_letters(Letter x, Letter y) {
  using enum Letter;
  if (x == a && y == b) return std::pair{1, c};
  if (x == b && y == a) return std::pair{-1, c};
  if (x == c && y == d) return std::pair{1, e};
  if (x == d && y == c) return std::pair{-1, e};
  return std::nullopt;
}

MalcevVector jacobian_m(const MalcevVector& x, const MalcevVector& y, const MalcevVector& z) {
  return bracket_m(bracket_m(x, y), z) + bracket_m(bracket_m(y, z), x) +
         bracket_m(bracket_m(z, x), y);
}

}  // namespace malcev5
