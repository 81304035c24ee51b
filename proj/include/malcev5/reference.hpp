#pragma once

// Independent formulas used to cross-check the product kernels. Each one is
// computed by a different route from the code it is compared against.

#include <array>
#include <string>
#include <vector>

#include "malcev5/element.hpp"
#include "malcev5/operator.hpp"

namespace malcev5::reference {

/// Product in the associative subalgebra generated by c, d, e:
/// (c^i d^j e^k)(c^l d^m e^n) = sum_a (-1)^a a! C(j,a) C(l,a) c^{i+l-a} d^{j+m-a} e^{k+n+a}.
/// Throws std::invalid_argument if x or y involves a or b.
UElement cde_product(const Monomial& x, const Monomial& y);

/// [b^q c^r d^s e^t, a] = -q b^{q-1} c^{r+1} d^s e^t + (qs/2) b^{q-1} c^r d^{s-1} e^{t+1}.
UElement bcde_bracket_with_a(Exponent q, Exponent r, Exponent s, Exponent t);

/// L(x) built by composing generator operators:
/// L(f x') = 2 L(f) L(x') - L(x') L(f) - L(x') rho(f) + rho(f) L(x').
Operator l_by_composition(const Monomial& x);

/// L(c)^k L(d)^l L(e)^m.
Operator cde_operator_product(Exponent k, Exponent l, Exponent m);

/// sum_a a!/6^a C(j,a) C(l,a) D_a^a L(b)^{j-a} L(c)^k L(d)^{l-a} L(e)^{m+a}.
Operator bcde_operator_expansion(Exponent j, Exponent k, Exponent l, Exponent m);

/// Trinomial expansions of L(b)^u and L(d)^y in normal-ordered words.
Operator lb_power_expansion(unsigned u);
Operator ld_power_expansion(unsigned y);

/// Exponents of the standard-order word
/// L(a)^s D_a^t L(b)^u D_b^v L(c)^w D_d^x L(d)^y L(e)^z.
struct StandardWord {
  unsigned s = 0, t = 0, u = 0, v = 0, w = 0, x = 0, y = 0, z = 0;
};

/// The word evaluated by composition.
Operator standard_word(const StandardWord& word);

/// Right side of the straightening identity
/// 2 L(a) X - X L(a) - X rho(a) + rho(a) X
///   = X[s+1] - t X[t-1] + u/6 X[u-1, x+1, z+1] - y/6 X[v+1, y-1, z+1].
Operator straightening_rhs(const StandardWord& word);

/// One printed entry of the commutator table of L(v) and rho(v).
struct CommutatorEntry {
  std::string label;  // e.g. "[L(a),L(b)]"
  Operator left;
  Operator right;
  Operator expected;
};

/// The fourteen nonzero commutators between the operators L(v), rho(v).
std::vector<CommutatorEntry> nonzero_commutator_table();

/// All ten operators L(a..e), rho(a..e) with labels, in that order.
std::vector<std::pair<std::string, Operator>> generator_operators();

/// Associator-commutator identity for generators f, g:
/// 1/6 [[y,f],g] - 1/6 [[y,g],f] - 1/6 [y,[f,g]], brackets via mul_u.
UElement associator_by_commutators(Letter f, Letter g, const UElement& y);

}  // namespace malcev5::reference
