#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "malcev5/rational.hpp"

namespace malcev5 {

/// Basis letters of the five-dimensional nilpotent Malcev algebra, in the
/// linear order a < b < c < d < e used by every monomial basis.
enum class Letter : std::uint8_t { a = 0, b = 1, c = 2, d = 3, e = 4 };

inline constexpr std::size_t kDimension = 5;
inline constexpr std::array<Letter, kDimension> kLetters{Letter::a, Letter::b, Letter::c, Letter::d,
                                                         Letter::e};

constexpr std::size_t index_of(Letter v) { return static_cast<std::size_t>(v); }
constexpr Letter letter_at(std::size_t i) { return static_cast<Letter>(i); }
constexpr char to_char(Letter v) { return static_cast<char>('a' + static_cast<int>(v)); }
std::optional<Letter> letter_from_char(char ch);

/// Element of M with rational coordinates over (a, b, c, d, e).
class MalcevVector {
 public:
  MalcevVector() = default;
  explicit MalcevVector(std::array<Rational, kDimension> coords) : coords_(std::move(coords)) {}

  static MalcevVector basis(Letter v);

  const Rational& operator[](Letter v) const { return coords_[index_of(v)]; }
  Rational& operator[](Letter v) { return coords_[index_of(v)]; }
  const std::array<Rational, kDimension>& coords() const { return coords_; }

  bool is_zero() const;

  MalcevVector& operator+=(const MalcevVector& other);
  MalcevVector& operator-=(const MalcevVector& other);
  MalcevVector& operator*=(const Rational& scalar);

  friend MalcevVector operator+(MalcevVector x, const MalcevVector& y) { return x += y; }
  friend MalcevVector operator-(MalcevVector x, const MalcevVector& y) { return x -= y; }
  friend MalcevVector operator*(const Rational& s, MalcevVector x) { return x *= s; }
  friend bool operator==(const MalcevVector& x, const MalcevVector& y) { return x.coords_ == y.coords_; }

 private:
  std::array<Rational, kDimension> coords_{};
};

/// The bracket of M: [a,b] = c, [c,d] = e, extended bilinearly and
/// antisymmetrically; all other basis brackets vanish.
MalcevVector bracket_m(const MalcevVector& x, const MalcevVector& y);

/// Bracket of two basis letters as (sign, letter), or nullopt when zero.
std::optional<std::pair<int, Letter>> bracket_letters(Letter x, Letter y);

/// Jacobian [[x,y],z] + [[y,z],x] + [[z,x],y] in M.
MalcevVector jacobian_m(const MalcevVector& x, const MalcevVector& y, const MalcevVector& z);

}  // namespace malcev5
