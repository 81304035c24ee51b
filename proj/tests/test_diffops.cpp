#include <doctest.h>

#include "malcev5/envelope.hpp"
#include "malcev5/operator.hpp"
#include "malcev5/reference.hpp"
#include "random_inputs.hpp"

using namespace malcev5;
using enum Letter;

namespace {

Operator M(Letter v, Exponent n = 1) { return multiplication(v, n); }
Operator D(Letter v, Exponent n = 1) { return derivation(v, n); }
Operator op(std::initializer_list<Operator> factors) { return compose_all(factors); }
const Rational half = make_rational(1, 2);
const Rational third = make_rational(1, 3);

}  // namespace

TEST_CASE("normal ordering obeys the Weyl relation") {
  CHECK(compose(D(a), M(a)) == compose(M(a), D(a)) + identity_operator());
  CHECK(commutator(D(b), M(c)).is_zero());
  CHECK(commutator(D(a), M(a, 2)) == Rational(2) * M(a));
  // D^2 M^2 = M^2 D^2 + 4 M D + 2.
  CHECK(compose(D(d, 2), M(d, 2)) ==
        compose(M(d, 2), D(d, 2)) + Rational(4) * compose(M(d), D(d)) + Rational(2) * identity_operator());
  CHECK_THROWS_AS(D(e), std::invalid_argument);
}

TEST_CASE("operators act on polynomials") {
  const Monomial x(3, 0, 1, 0, 0);
  CHECK(apply_operator(D(a), x) == Rational(3) * UElement(Monomial(2, 0, 1, 0, 0)));
  CHECK(apply_operator(D(a, 4), x).is_zero());
  CHECK(apply_operator(M(e), x) == UElement(Monomial(3, 0, 1, 0, 1)));
  CHECK(apply_operator(identity_operator(), x) == UElement(x));
}

TEST_CASE("rho and L match their defining formulas") {
  CHECK(rho(a) == -op({M(c), D(b)}) + half * op({M(e), D(b), D(d)}));
  CHECK(rho(b) == op({M(c), D(a)}) - half * op({M(e), D(a), D(d)}));
  CHECK(rho(c) == -op({M(e), D(d)}));
  CHECK(rho(d) == op({M(e), D(c)}) + half * op({M(e), D(a), D(b)}));
  CHECK(rho(e).is_zero());
  CHECK(lmul(a) == M(a));
  CHECK(lmul(b) == M(b) - op({M(c), D(a)}) + third * op({M(e), D(a), D(d)}));
  CHECK(lmul(c) == M(c));
  CHECK(lmul(d) == M(d) - op({M(e), D(c)}) - third * op({M(e), D(a), D(b)}));
  CHECK(lmul(e) == M(e));
}

TEST_CASE("operator text form") {
  CHECK(to_string(rho(c)) == "-M_e D_d");
  CHECK(to_string(Operator{}) == "0");
  CHECK(to_string(Rational(3) * identity_operator()) == "3");
  CHECK(to_string(M(a, 2) + D(b)) == "D_b + M_a^2");
}

TEST_CASE("property: composition is an associative action") {
  testing::RandomInputs rnd(5);
  for (int n = 0; n < 150; ++n) {
    const Operator f = rnd.op(), g = rnd.op(), h = rnd.op();
    const UElement x = rnd.element(4);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(compose(f, g + h) == compose(f, g) + compose(f, h));
    CHECK(apply_operator(compose(f, g), x) == apply_operator(f, apply_operator(g, x)));
    CHECK(commutator(f, g) == -commutator(g, f));
    CHECK(compose(identity_operator(), f) == f);
  }
}

TEST_CASE("L of a monomial") {
  CHECK(l_of_monomial(Monomial{}) == identity_operator());
  for (Letter v : kLetters) CHECK(l_of_monomial(Monomial::generator(v)) == lmul(v));
  CHECK(power(lmul(b), 3) == reference::lb_power_expansion(3));
  CHECK(power(lmul(d), 4) == reference::ld_power_expansion(4));
}

TEST_CASE("property: L(x) applied to 1 is x and L(x) y is the product") {
  testing::RandomInputs rnd(9);
  for (int n = 0; n < 60; ++n) {
    const Monomial x = rnd.monomial(5), y = rnd.monomial(4);
    const Operator lx = l_of_monomial(x);
    CHECK(apply_operator(lx, Monomial{}) == UElement(x));
    CHECK(apply_operator(lx, y) == mul_u_closed(x, y));
    CHECK(lx == reference::l_by_composition(x));
  }
}

TEST_CASE("property: rho(v) is the bracket with v") {
  testing::RandomInputs rnd(13);
  for (int n = 0; n < 100; ++n) {
    const UElement x = rnd.element(5);
    for (Letter v : kLetters) CHECK(apply_operator(rho(v), x) == bracket_u(x, generator_element(v)));
  }
}

TEST_CASE("commutator table") {
  const auto table = reference::nonzero_commutator_table();
  CHECK(table.size() == 14);
  for (const auto& entry : table) {
    CAPTURE(entry.label);
    CHECK(commutator(entry.left, entry.right) == entry.expected);
  }
  CHECK(commutator(lmul(a), lmul(b)) == M(c) - third * op({M(e), D(d)}));
}
