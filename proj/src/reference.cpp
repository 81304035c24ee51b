#include "malcev5/reference.hpp"

#include <map>
#include <stdexcept>

#include "malcev5/combinatorics.hpp"
#include "malcev5/envelope.hpp"

namespace malcev5::reference {

namespace {

using enum Letter;

OperatorWord word(std::array<Exponent, kDimension> mul, std::array<Exponent, kDerivationSlots> der) {
  return OperatorWord{mul, der};
}

}  // namespace

UElement cde_product(const Monomial& x, const Monomial& y) {
  if (x[a] || x[b] || y[a] || y[b]) throw std::invalid_argument("cde_product needs c, d, e monomials");
  const Exponent i = x[c], j = x[d], k = x[e];
  const Exponent l = y[c], m = y[d], n = y[e];
  UElement out;
  for (Exponent alpha = 0; alpha <= std::min(j, l); ++alpha) {
    Integer coeff = factorial(alpha) * binomial(j, alpha) * binomial(l, alpha);
    if (alpha % 2) coeff = -coeff;
    out.add_term(Monomial(0, 0, i + l - alpha, j + m - alpha, k + n + alpha), Rational(coeff));
  }
  return out;
}

UElement bcde_bracket_with_a(Exponent q, Exponent r, Exponent s, Exponent t) {
  UElement out;
  if (q == 0) return out;
  out.add_term(Monomial(0, q - 1, r + 1, s, t), -Rational(q));
  if (s > 0) out.add_term(Monomial(0, q - 1, r, s - 1, t + 1), make_rational(q * s, 2));
  return out;
}

Operator l_by_composition(const Monomial& x) {
  std::map<Monomial, Operator> memo;
  auto build = [&memo](auto& self, const Monomial& mono) -> Operator {
    if (mono.is_unit()) return identity_operator();
    if (auto it = memo.find(mono); it != memo.end()) return it->second;
    const Letter f = *mono.leading_letter();
    const Operator rest = self(self, mono.without(f));
    const Operator lf = lmul(f), rf = rho(f);
    Operator out = Rational(2) * compose(lf, rest);
    out -= compose(rest, lf);
    out -= compose(rest, rf);
    out += compose(rf, rest);
    memo.emplace(mono, out);
    return out;
  };
  return build(build, x);
}

Operator cde_operator_product(Exponent k, Exponent l, Exponent m) {
  return compose_all({power(lmul(c), k), power(lmul(d), l), power(lmul(e), m)});
}

Operator bcde_operator_expansion(Exponent j, Exponent k, Exponent l, Exponent m) {
  Operator out;
  for (Exponent alpha = 0; alpha <= std::min(j, l); ++alpha) {
    const Rational weight = make_rational(factorial(alpha) * binomial(j, alpha) * binomial(l, alpha),
                                          power(6, alpha));
    out.add_scaled(weight, compose_all({derivation(a, alpha), power(lmul(b), j - alpha),
                                        power(lmul(c), k), power(lmul(d), l - alpha),
                                        power(lmul(e), m + alpha)}));
  }
  return out;
}

Operator lb_power_expansion(unsigned u) {
  Operator out;
  for (unsigned eps = 0; eps <= u; ++eps) {
    for (unsigned zeta = 0; zeta <= u - eps; ++zeta) {
      const unsigned rest = u - eps - zeta;
      Rational coeff = make_rational(multinomial(u, {eps, zeta}), power(3, rest));
      if (zeta % 2) coeff = -coeff;
      out.add_term(word({0, eps, zeta, 0, rest}, {u - eps, 0, 0, rest}), coeff);
    }
  }
  return out;
}

Operator ld_power_expansion(unsigned y) {
  Operator out;
  for (unsigned eta = 0; eta <= y; ++eta) {
    for (unsigned theta = 0; theta <= y - eta; ++theta) {
      const unsigned rest = y - eta - theta;
      Rational coeff = make_rational(multinomial(y, {eta, theta}), power(3, rest));
      if ((y - eta) % 2) coeff = -coeff;
      out.add_term(word({0, 0, 0, eta, y - eta}, {rest, rest, theta, 0}), coeff);
    }
  }
  return out;
}

Operator standard_word(const StandardWord& w) {
  return compose_all({power(lmul(a), w.s), derivation(a, w.t), power(lmul(b), w.u),
                      derivation(b, w.v), power(lmul(c), w.w), derivation(d, w.x),
                      power(lmul(d), w.y), power(lmul(e), w.z)});
}

Operator straightening_rhs(const StandardWord& w) {
  StandardWord shifted = w;
  ++shifted.s;
  Operator out = standard_word(shifted);
  if (w.t > 0) {
    StandardWord lower = w;
    --lower.t;
    out.add_scaled(-Rational(w.t), standard_word(lower));
  }
  if (w.u > 0) {
    StandardWord moved = w;
    --moved.u;
    ++moved.x;
    ++moved.z;
    out.add_scaled(make_rational(w.u, 6), standard_word(moved));
  }
  if (w.y > 0) {
    StandardWord moved = w;
    ++moved.v;
    --moved.y;
    ++moved.z;
    out.add_scaled(-make_rational(w.y, 6), standard_word(moved));
  }
  return out;
}

std::vector<CommutatorEntry> nonzero_commutator_table() {
  const Operator Mc = multiplication(c), Me = multiplication(e);
  const Operator MeDa = compose(Me, derivation(a)), MeDb = compose(Me, derivation(b)),
                 MeDd = compose(Me, derivation(d));
  const Rational half = make_rational(1, 2), third = make_rational(1, 3);
  std::vector<CommutatorEntry> table;
  auto add = [&table](std::string label, Operator f, Operator g, Operator expected) {
    table.push_back({std::move(label), std::move(f), std::move(g), std::move(expected)});
  };
  add("[L(a),L(b)]", lmul(a), lmul(b), Mc - third * MeDd);
  add("[L(a),L(d)]", lmul(a), lmul(d), third * MeDb);
  add("[L(b),L(d)]", lmul(b), lmul(d), -third * MeDa);
  add("[L(c),L(d)]", lmul(c), lmul(d), Me);
  add("[rho(a),rho(d)]", rho(a), rho(d), MeDb);
  add("[rho(b),rho(d)]", rho(b), rho(d), -MeDa);
  add("[L(a),rho(b)]", lmul(a), rho(b), -Mc + half * MeDd);
  add("[L(a),rho(d)]", lmul(a), rho(d), -half * MeDb);
  add("[L(b),rho(a)]", lmul(b), rho(a), Mc - half * MeDd);
  add("[L(b),rho(d)]", lmul(b), rho(d), half * MeDa);
  add("[L(c),rho(d)]", lmul(c), rho(d), -Me);
  add("[L(d),rho(a)]", lmul(d), rho(a), half * MeDb);
  add("[L(d),rho(b)]", lmul(d), rho(b), -half * MeDa);
  add("[L(d),rho(c)]", lmul(d), rho(c), Me);
  return table;
}

std::vector<std::pair<std::string, Operator>> generator_operators() {
  std::vector<std::pair<std::string, Operator>> out;
  for (Letter v : kLetters) out.emplace_back(std::string("L(") + to_char(v) + ")", lmul(v));
  for (Letter v : kLetters) out.emplace_back(std::string("rho(") + to_char(v) + ")", rho(v));
  return out;
}

UElement associator_by_commutators(Letter f, Letter g, const UElement& y) {
  const UElement uf = generator_element(f), ug = generator_element(g);
  const UElement fg = embed(bracket_m(MalcevVector::basis(f), MalcevVector::basis(g)));
  const Rational sixth = make_rational(1, 6);
  return sixth * bracket_u(bracket_u(y, uf), ug) - sixth * bracket_u(bracket_u(y, ug), uf) -
         sixth * bracket_u(y, fg);
}

}  // namespace malcev5::reference
