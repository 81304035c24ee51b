#include <doctest.h>

#include <json.hpp>

#include "malcev5/text.hpp"
#include "random_inputs.hpp"

using namespace malcev5;

TEST_CASE("parsing monomials and coefficients") {
  CHECK(parse_element("abd") == UElement(Monomial(1, 1, 0, 1, 0)));
  CHECK(parse_element("a*b*d") == parse_element("abd"));
  CHECK(parse_element("2*a^2 b") == Rational(2) * UElement(Monomial(2, 1, 0, 0, 0)));
  CHECK(parse_element("-3/6 e") == make_rational(-1, 2) * UElement(Monomial(0, 0, 0, 0, 1)));
  CHECK(parse_element("5") == Rational(5) * UElement(Monomial{}));
  CHECK(parse_element("a + a") == Rational(2) * UElement(Monomial(1, 0, 0, 0, 0)));
  CHECK(parse_element("a - a").is_zero());
  CHECK(parse_element("1/6 abcd^2e \xE2\x88\x92 1/12 e^3").size() == 2);
}

TEST_CASE("parse errors") {
  try {
    parse_element("ba");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(kLetterOrderMessage) != std::string::npos);
    CHECK(e.offset() == 1);
  }
  CHECK_THROWS_AS(parse_element("aa"), ParseError);
  CHECK_THROWS_AS(parse_element(""), ParseError);
  CHECK_THROWS_AS(parse_element("1/0 a"), ParseError);
  CHECK_THROWS_AS(parse_element("a +"), ParseError);
  CHECK_THROWS_AS(parse_element("f"), ParseError);
  CHECK_THROWS_AS(parse_element("a^"), ParseError);
}

TEST_CASE("canonical text") {
  CHECK(format_element(UElement{}) == "0");
  CHECK(format_element(parse_element("-1/12 e^3 + 1/6 abcd^2e")) == "1/6 abcd^2e - 1/12 e^3");
  CHECK(format_element(parse_element("3 - c")) == "-c + 3");
  CHECK(format_element(project(parse_element("abde + ce"))) == "abde");
}

TEST_CASE("structured output") {
  const auto doc = nlohmann::json::parse(format_json(parse_element("-1/6 ce + 2")));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["coeff"] == "-1/6");
  CHECK(doc[0]["exp"] == nlohmann::json({0, 0, 1, 0, 1}));
  CHECK(doc[1]["coeff"] == "2");
  const auto adoc = nlohmann::json::parse(format_json(project(parse_element("abde + c"))));
  CHECK(adoc[0]["type"] == 1);
  CHECK(adoc[1]["type"] == 2);
  CHECK(format_json(UElement{}) == "[]");
}

TEST_CASE("property: parse(format(x)) = x") {
  testing::RandomInputs rnd(41);
  for (int n = 0; n < 300; ++n) {
    const UElement x = rnd.element(6, 5);
    CHECK(parse_element(format_element(x)) == x);
    const AElement y = rnd.a_element(4, 4);
    CHECK(project(parse_element(format_element(y))) == y);
  }
}
