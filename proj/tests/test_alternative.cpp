#include <doctest.h>

#include "malcev5/alternative.hpp"
#include "malcev5/envelope.hpp"
#include "malcev5/text.hpp"
#include "random_inputs.hpp"

using namespace malcev5;

namespace {
UElement u(const char* text) { return parse_element(text); }
}  // namespace

TEST_CASE("the ideal J and its quotient basis") {
  CHECK(in_ideal_j(Monomial(0, 0, 1, 0, 1)));
  CHECK(in_ideal_j(Monomial(0, 0, 0, 0, 2)));
  CHECK(!in_ideal_j(Monomial(1, 1, 0, 1, 1)));
  CHECK(!in_ideal_j(Monomial(0, 0, 3, 0, 0)));
  CHECK(!AMonomial::from_pbw(Monomial(2, 0, 1, 0, 1)));
  const auto t1 = AMonomial::from_pbw(Monomial(1, 2, 0, 3, 1));
  REQUIRE(t1);
  CHECK(t1->type() == AType::one);
  CHECK(*t1 == AMonomial::type1(1, 2, 3));
  CHECK(AMonomial::type2(1, 2, 3, 4).type() == AType::two);
  CHECK(AMonomial::type2(1, 2, 3, 4).c() == 3);
}

TEST_CASE("projection and lift") {
  const UElement x = u("abde + 3 ce - e^2 + 2 c^2");
  const AElement px = project(x);
  CHECK(px.size() == 2);
  CHECK(lift(px) == u("abde + 2 c^2"));
  CHECK(project(lift(px)) == px);
  CHECK(project(u("-1/6 ce")).is_zero());
}

TEST_CASE("products in A(M)") {
  const AElement a(AMonomial::type2(1, 0, 0, 0)), b(AMonomial::type2(0, 1, 0, 0));
  CHECK(commutator_a(a, b) == AElement(AMonomial::type2(0, 0, 1, 0)));
  CHECK(mul_a(AMonomial::type1(0, 0, 0), AMonomial::type1(0, 0, 0)).is_zero());  // e^2 in J
  CHECK(mul_a(AMonomial::type2(0, 0, 1, 0), AMonomial::type1(0, 0, 0)).is_zero());  // ce in J
  CHECK(associator_a(project(u("ab")), project(u("ab")), project(u("d"))).is_zero());
}

TEST_CASE("type-2 associator closed form") {
  const auto x = AMonomial::type2(1, 0, 0, 0), y = AMonomial::type2(0, 1, 0, 0), z = AMonomial::type2(0, 0, 0, 1);
  // weight i q y' = 1 for (a, b, d).
  CHECK(type2_associator_closed_form(x, y, z) == make_rational(1, 6) * AElement(AMonomial::type1(0, 0, 0)));
  CHECK(associator_a(AElement(x), AElement(y), AElement(z)) == type2_associator_closed_form(x, y, z));
  CHECK(type2_associator_closed_form(AMonomial::type2(1, 0, 1, 0), y, z).is_zero());
  CHECK_THROWS_AS(type2_associator_closed_form(AMonomial::type1(0, 0, 0), y, z), std::invalid_argument);
}

TEST_CASE("property: A(M) is alternative") {
  testing::RandomInputs rnd(31);
  for (int n = 0; n < 200; ++n) {
    const AElement x = rnd.a_element(3), y = rnd.a_element(3), z = rnd.a_element(2);
    CHECK(associator_a(x, x, y).is_zero());
    CHECK(associator_a(y, x, x).is_zero());
    CHECK(associator_a(x, y, z) == -associator_a(y, x, z));
    CHECK(associator_a(x, y, z) == -associator_a(x, z, y));
  }
}

TEST_CASE("property: projection is a homomorphism") {
  testing::RandomInputs rnd(32);
  for (int n = 0; n < 200; ++n) {
    const UElement x = rnd.element(4), y = rnd.element(4);
    CHECK(project(mul_u(x, y)) == mul_a(project(x), project(y)));
  }
}

TEST_CASE("speciality") {
  const SpecialityReport report = check_speciality();
  CHECK(report.passed);
  CHECK(report.violation.empty());
  CHECK(report.checks > 0);
}
