#include "malcev5/operator.hpp"

#include <cstdint>
#include <stdexcept>

#include "malcev5/combinatorics.hpp"

namespace malcev5 {

Operator identity_operator() { return Operator(OperatorWord{}); }

Operator multiplication(Letter v, Exponent power) {
  OperatorWord w;
  w.mul[index_of(v)] = power;
  return Operator(w);
}

Operator derivation(Letter v, Exponent power) {
  if (v == Letter::e) throw std::invalid_argument("no derivation slot for the central letter e");
  OperatorWord w;
  w.der[index_of(v)] = power;
  return Operator(w);
}

UElement apply_operator(const Operator& op, const Monomial& x) {
  UElement out;
  for (const auto& [word, coeff] : op.terms()) {
    ExponentTuple exps = x.exponents();
    Integer scale = 1;
    bool vanishes = false;
    for (std::size_t v = 0; v < kDerivationSlots; ++v) {
      if (word.der[v] > exps[v]) {
        vanishes = true;
        break;
      }
      scale *= falling_factorial(exps[v], word.der[v]);
      exps[v] -= word.der[v];
    }
    if (vanishes) continue;
    for (std::size_t v = 0; v < kDimension; ++v) exps[v] += word.mul[v];
    out.add_term(Monomial(exps), coeff * scale);
  }
  return out;
}

UElement apply_operator(const Operator& op, const UElement& x) {
  UElement out;
  for (const auto& [mono, coeff] : x.terms()) out.add_scaled(coeff, apply_operator(op, mono));
  return out;
}

namespace {

// Straightens the middle D^B M^C of (M^A D^B)(M^C D^E) one variable at a time.
void straighten(const OperatorWord& left, const OperatorWord& right, std::size_t slot,
                OperatorWord& acc, const Rational& coeff, Operator& out) {
  if (slot == kDerivationSlots) {
    acc.mul[index_of(Letter::e)] = left.mul[index_of(Letter::e)] + right.mul[index_of(Letter::e)];
    out.add_term(acc, coeff);
    return;
  }
  const Exponent m = left.der[slot];
  const Exponent n = right.mul[slot];
  const Exponent top = std::min(m, n);
  for (Exponent i = 0; i <= top; ++i) {
    acc.mul[slot] = left.mul[slot] + n - i;
    acc.der[slot] = m - i + right.der[slot];
    const Integer weight = factorial(i) * binomial(m, i) * binomial(n, i);
    straighten(left, right, slot + 1, acc, coeff * weight, out);
  }
}

}  // namespace

Operator compose(const Operator& f, const Operator& g) {
  Operator out;
  for (const auto& [fw, fc] : f.terms()) {
    for (const auto& [gw, gc] : g.terms()) {
      OperatorWord acc;
      straighten(fw, gw, 0, acc, fc * gc, out);
    }
  }
  return out;
}

Operator compose_all(std::initializer_list<Operator> factors) {
  Operator out = identity_operator();
  for (const Operator& f : factors) out = compose(out, f);
  return out;
}

Operator power(const Operator& op, unsigned n) {
  Operator out = identity_operator();
  for (unsigned i = 0; i < n; ++i) out = compose(out, op);
  return out;
}

Operator commutator(const Operator& f, const Operator& g) { return compose(f, g) - compose(g, f); }

Operator rho(Letter v) {
  using enum Letter;
  const Rational half = make_rational(1, 2);
  switch (v) {
    case a:
      return -compose(multiplication(c), derivation(b)) +
             half * compose_all({multiplication(e), derivation(b), derivation(d)});
    case b:
      return compose(multiplication(c), derivation(a)) -
             half * compose_all({multiplication(e), derivation(a), derivation(d)});
    case c:
      return -compose(multiplication(e), derivation(d));
    case d:
      return compose(multiplication(e), derivation(c)) +
             half * compose_all({multiplication(e), derivation(a), derivation(b)});
    case e:
      return Operator{};
  }
  throw std::invalid_argument("unknown letter");
}

Operator lmul(Letter v) {
  using enum Letter;
  const Rational third = make_rational(1, 3);
  switch (v) {
    case a:
      return multiplication(a);
    case b:
      return multiplication(b) - compose(multiplication(c), derivation(a)) +
             third * compose_all({multiplication(e), derivation(a), derivation(d)});
    case c:
      return multiplication(c);
    case d:
      return multiplication(d) - compose(multiplication(e), derivation(c)) -
             third * compose_all({multiplication(e), derivation(a), derivation(b)});
    case e:
      return multiplication(e);
  }
  throw std::invalid_argument("unknown letter");
}

Operator l_of_monomial(const Monomial& x) {
  using I = std::int64_t;
  const I i = x[Letter::a], j = x[Letter::b], k = x[Letter::c], l = x[Letter::d],
          m = x[Letter::e];
  Operator out;
  for (I alpha = 0; alpha <= l; ++alpha) {
    const Integer alpha_fact = factorial(alpha);
    for (I beta = 0; beta <= i; ++beta) {
      const Integer q_factor = binomial(i, beta) * factorial(beta);
      for (I gamma = 0; gamma <= beta; ++gamma) {
        const Integer p_factor = binomial(alpha, beta - gamma);
        if (p_factor == 0) continue;
        for (I delta = 0; delta <= gamma; ++delta) {
          for (I eps = 0; eps <= j - alpha - delta; ++eps) {
            for (I zeta = 0; zeta <= j - alpha - delta - eps; ++zeta) {
              const Integer r_factor = multinomial(j, {alpha, delta, eps, zeta});
              if (r_factor == 0) continue;
              const I b_rest = j - alpha - eps - zeta;
              for (I eta = 0; eta <= l - alpha - (gamma - delta); ++eta) {
                for (I theta = 0; theta <= l - alpha - (gamma - delta) - eta; ++theta) {
                  const Integer s_factor = multinomial(l, {alpha, gamma - delta, eta, theta});
                  if (s_factor == 0) continue;
                  for (I lambda = 0; lambda <= eta; ++lambda) {
                    const Integer lambda_factor =
                        factorial(lambda) * binomial(b_rest, lambda) * binomial(eta, lambda);
                    if (lambda_factor == 0) continue;
                    const I sign_exp = beta + zeta + l - alpha - gamma - eta;
                    const I threes = j - eps - zeta + l - alpha - eta - theta;
                    Integer num = alpha_fact * q_factor * p_factor * r_factor * s_factor *
                                  lambda_factor;
                    if (sign_exp % 2 != 0) num = -num;
                    const Integer den = power(2, alpha + gamma) * power(3, threes);

                    const I der_a = j - beta - eps + l - alpha - eta - theta;
                    const I der_b = l - alpha - eta - theta;
                    const I der_d = b_rest - lambda;
                    const I mul_e = b_rest + l - eta + m;
                    if (der_a < 0 || der_b < 0 || der_d < 0 || mul_e < 0)
                      throw std::logic_error("negative exponent with nonzero weight");
                    OperatorWord w;
                    w.mul = {static_cast<Exponent>(i - beta), static_cast<Exponent>(eps),
                             static_cast<Exponent>(zeta + k), static_cast<Exponent>(eta - lambda),
                             static_cast<Exponent>(mul_e)};
                    w.der = {static_cast<Exponent>(der_a), static_cast<Exponent>(der_b),
                             static_cast<Exponent>(theta), static_cast<Exponent>(der_d)};
                    out.add_term(w, make_rational(num, den));
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

std::string to_string(const Operator& op) {
  if (op.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [word, coeff] : op.terms()) {
    Rational mag = abs(coeff);
    if (first) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    first = false;
    std::string factors;
    auto append = [&factors](char kind, std::size_t slot, Exponent n) {
      if (n == 0) return;
      if (!factors.empty()) factors += ' ';
      factors += kind;
      factors += '_';
      factors += to_char(letter_at(slot));
      if (n > 1) factors += "^" + std::to_string(n);
    };
    for (std::size_t v = 0; v < kDimension; ++v) append('M', v, word.mul[v]);
    for (std::size_t v = 0; v < kDerivationSlots; ++v) append('D', v, word.der[v]);
    if (factors.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + " ";
      out += factors;
    }
  }
  return out;
}

}  // namespace malcev5
