#pragma once

#include <compare>
#include <string>

#include "malcev5/element.hpp"
#include "malcev5/linear_combination.hpp"

namespace malcev5 {

/// Quotient basis of A(M) = U(M)/J, J the ideal generated by ce and e^2.
///   type 1: a^i b^j d^l e   (e-exponent 1, no c)
///   type 2: a^i b^j c^k d^l (no e)
enum class AType : std::uint8_t { one = 1, two = 2 };

class AMonomial {
 public:
  static AMonomial type1(Exponent i, Exponent j, Exponent l) { return AMonomial(Monomial(i, j, 0, l, 1)); }
  static AMonomial type2(Exponent i, Exponent j, Exponent k, Exponent l) {
    return AMonomial(Monomial(i, j, k, l, 0));
  }
  /// The basis monomial of x modulo J, or nullopt when x lies in J.
  static std::optional<AMonomial> from_pbw(const Monomial& x);

  AType type() const { return pbw_[Letter::e] == 0 ? AType::two : AType::one; }
  Exponent a() const { return pbw_[Letter::a]; }
  Exponent b() const { return pbw_[Letter::b]; }
  Exponent c() const { return pbw_[Letter::c]; }
  Exponent d() const { return pbw_[Letter::d]; }

  /// The representative monomial in U(M).
  const Monomial& pbw() const { return pbw_; }

  friend auto operator<=>(const AMonomial&, const AMonomial&) = default;

 private:
  explicit AMonomial(const Monomial& pbw) : pbw_(pbw) {}
  Monomial pbw_;
};

struct AOrder {
  bool operator()(const AMonomial& x, const AMonomial& y) const { return DisplayOrder{}(x.pbw(), y.pbw()); }
};

using AElement = LinearCombination<AMonomial, AOrder>;

/// True iff x spans part of J: e-exponent >= 2, or e-exponent 1 with a c.
bool in_ideal_j(const Monomial& x);

/// The quotient map U(M) -> A(M): monomials in J are dropped.
AElement project(const UElement& x);

/// Representative in U(M) built from the basis monomials of x.
UElement lift(const AElement& x);

/// Product of quotient basis monomials from the closed structure constants.
AElement mul_a(const AMonomial& x, const AMonomial& y);
AElement mul_a(const AElement& x, const AElement& y);

AElement commutator_a(const AElement& x, const AElement& y);
AElement associator_a(const AElement& x, const AElement& y, const AElement& z);

/// Closed form of the associator of three type-2 monomials:
/// 1/6 (iqy - isw - jpy + jsv + lpw - lqv) a^{i+p+v-1} b^{j+q+w-1} d^{l+s+y-1} e
/// when no argument contains c, and zero otherwise.
/// Throws std::invalid_argument if an argument has type 1.
AElement type2_associator_closed_form(const AMonomial& x, const AMonomial& y, const AMonomial& z);

struct SpecialityReport {
  bool passed = true;
  /// First violated condition, empty when passed.
  std::string violation;
  std::size_t checks = 0;
};

/// Verifies that no generator of M lies in J and that commutators of
/// generators in A(M) reproduce the bracket table of M.
SpecialityReport check_speciality();

}  // namespace malcev5
