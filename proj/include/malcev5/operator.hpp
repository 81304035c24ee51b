#pragma once

#include <array>
#include <compare>
#include <initializer_list>
#include <string>

#include "malcev5/element.hpp"
#include "malcev5/linear_combination.hpp"

namespace malcev5 {

/// Number of derivation slots: D_a, D_b, D_c, D_d. Nothing ever differentiates
/// with respect to the central element e, so D_e has no slot.
inline constexpr std::size_t kDerivationSlots = 4;

/// Normal-ordered operator word M_a^.. M_e^.. D_a^.. D_d^..: all derivations
/// act first, then all multiplications.
struct OperatorWord {
  std::array<Exponent, kDimension> mul{};
  std::array<Exponent, kDerivationSlots> der{};

  friend auto operator<=>(const OperatorWord&, const OperatorWord&) = default;
};

/// Linear operator on P(M) in normal form. Equality of two Operators is
/// equality of the operators they denote.
using Operator = LinearCombination<OperatorWord>;

Operator identity_operator();
/// M_v^power.
Operator multiplication(Letter v, Exponent power = 1);
/// D_v^power. Throws std::invalid_argument for v == e.
Operator derivation(Letter v, Exponent power = 1);

/// Applies op to x, with derivations before multiplications in each word.
UElement apply_operator(const Operator& op, const UElement& x);
UElement apply_operator(const Operator& op, const Monomial& x);

/// Normal form of f o g (g acts first). Each collision D_v^m M_v^n is
/// straightened with sum_i i! C(m,i) C(n,i) M_v^{n-i} D_v^{m-i}.
Operator compose(const Operator& f, const Operator& g);

/// compose(factors[0], compose(factors[1], ...)).
Operator compose_all(std::initializer_list<Operator> factors);

/// op^n under composition; op^0 is the identity.
Operator power(const Operator& op, unsigned n);

/// f o g - g o f.
Operator commutator(const Operator& f, const Operator& g);

/// Right bracket y -> [y, v] as a differential operator.
Operator rho(Letter v);

/// Left multiplication y -> v y as a differential operator.
Operator lmul(Letter v);

/// Left multiplication by the basis monomial x, evaluated from the closed
/// nine-index expansion into normal-ordered words.
Operator l_of_monomial(const Monomial& x);

/// Diagnostic text such as "-M_c D_b + 1/2 M_e D_b D_d".
std::string to_string(const Operator& op);

}  // namespace malcev5
