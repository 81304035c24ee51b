#include <doctest.h>

#include "malcev5/envelope.hpp"
#include "malcev5/reference.hpp"
#include "malcev5/text.hpp"
#include "random_inputs.hpp"

using namespace malcev5;
using enum Letter;

namespace {
UElement u(const char* text) { return parse_element(text); }
}  // namespace

TEST_CASE("printed associator and alternator values") {
  CHECK(associator_u(u("abd"), u("abd"), u("abd")) ==
        u("1/6 abcd^2e - 1/6 abde^2 - 1/6 c^2d^2e + 11/36 cde^2 - 1/12 e^3"));
  CHECK(associator_u(u("ab"), u("ab"), u("d")) == u("-1/6 ce"));
  CHECK(associator_u(u("bd"), u("bd"), u("a^2")) == u("1/18 e^2"));
}

TEST_CASE("generator products") {
  CHECK(mul_u(u("a"), u("b")) == u("ab"));
  CHECK(mul_u(u("b"), u("a")) == u("ab - c"));
  CHECK(mul_u(u("d"), u("c")) == u("cd - e"));
  CHECK(bracket_u(u("a"), u("b")) == u("c"));
  CHECK(jacobian_u(u("a"), u("b"), u("d")) == u("e"));
  CHECK(jacobian_u(u("c"), u("d"), u("e")).is_zero());
}

TEST_CASE("property: closed form, recursion and unit") {
  testing::RandomInputs rnd(21);
  RecursiveOracle oracle;
  for (int n = 0; n < 200; ++n) {
    const Monomial x = rnd.monomial(4), y = rnd.monomial(4);
    const UElement closed = mul_u_closed(x, y);
    CHECK(closed == oracle.multiply(x, y));
    CHECK(mul_u_closed(Monomial{}, x) == UElement(x));
    CHECK(mul_u_closed(x, Monomial{}) == UElement(x));
    CHECK(closed.coefficient(x.concatenated(y)) == 1);
    for (const auto& [m, c] : closed.terms()) CHECK(m.degree() <= x.degree() + y.degree());
  }
}

TEST_CASE("property: products are bilinear and brackets anticommute") {
  testing::RandomInputs rnd(22);
  for (int n = 0; n < 100; ++n) {
    const UElement x = rnd.element(3), y = rnd.element(3), z = rnd.element(3);
    const Rational s = rnd.coefficient();
    CHECK(mul_u(x, y + s * z) == mul_u(x, y) + s * mul_u(x, z));
    CHECK(mul_u(x + s * y, z) == mul_u(x, z) + s * mul_u(y, z));
    CHECK(bracket_u(x, y) == -bracket_u(y, x));
    CHECK(associator_u(x, y, z) == mul_u(mul_u(x, y), z) - mul_u(x, mul_u(y, z)));
  }
}

TEST_CASE("property: generators lie in the generalized nucleus") {
  testing::RandomInputs rnd(23);
  for (int n = 0; n < 100; ++n) {
    const UElement g = generator_element(letter_at(static_cast<std::size_t>(rnd.uniform(0, 4))));
    const UElement x = rnd.element(3), y = rnd.element(3);
    const UElement first = associator_u(g, x, y);
    CHECK(first == -associator_u(x, g, y));
    CHECK(first == associator_u(x, y, g));
  }
}

TEST_CASE("c,d,e subalgebra") {
  for (const Monomial& x : cde_monomials_up_to_degree(3))
    for (const Monomial& y : cde_monomials_up_to_degree(3)) CHECK(mul_u_closed(x, y) == reference::cde_product(x, y));
  CHECK_THROWS_AS(reference::cde_product(Monomial(1, 0, 0, 0, 0), Monomial{}), std::invalid_argument);
}

TEST_CASE("recursive oracle limits") {
  OracleLimits tight;
  tight.max_memo_entries = 8;
  RecursiveOracle bounded(tight);
  const Monomial x(1, 1, 0, 1, 0), y(0, 1, 1, 1, 0);
  CHECK(bounded.multiply(x, y) == mul_u_closed(x, y));
  CHECK(bounded.memo_entries() <= 2 * tight.max_memo_entries + 3);

  OracleLimits shallow;
  shallow.max_depth = 2;
  RecursiveOracle limited(shallow);
  CHECK_THROWS_AS(limited.multiply(Monomial(0, 2, 0, 2, 0), Monomial(2, 0, 0, 0, 0)), ComputationError);
  CHECK(mul_u_oracle(u("d"), u("c")) == u("cd - e"));
}

TEST_CASE("product cache agrees with the closed form") {
  ProductCache cache;
  const UElement x = u("ab + 2d"), y = u("bd - 1/2 c"), z = u("a^2");
  CHECK(cache.multiply(x, y) == mul_u(x, y));
  CHECK(cache.bracket(x, y) == bracket_u(x, y));
  CHECK(cache.associator(x, y, z) == associator_u(x, y, z));
  CHECK(cache.size() > 0);
}
