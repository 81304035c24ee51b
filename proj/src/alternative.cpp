#include "malcev5/alternative.hpp"

#include <stdexcept>

#include "malcev5/combinatorics.hpp"

namespace malcev5 {

bool in_ideal_j(const Monomial& x) {
  const Exponent m = x[Letter::e];
  return m >= 2 || (m == 1 && x[Letter::c] >= 1);
}

std::optional<AMonomial> AMonomial::from_pbw(const Monomial& x) {
  if (in_ideal_j(x)) return std::nullopt;
  return AMonomial(x);
}

AElement project(const UElement& x) {
  AElement out;
  for (const auto& [mono, coeff] : x.terms())
    if (auto am = AMonomial::from_pbw(mono)) out.add_term(*am, coeff);
  return out;
}

UElement lift(const AElement& x) {
  UElement out;
  for (const auto& [am, coeff] : x.terms()) out.add_term(am.pbw(), coeff);
  return out;
}

namespace {

using I = std::int64_t;

Exponent exponent_or_throw(I value) {
  if (value < 0) throw std::logic_error("negative exponent reached with a nonzero coefficient");
  return static_cast<Exponent>(value);
}

// e-coefficient of the type-2 by type-2 product.
Rational e_correction(I i, I j, I l, I p, I q, I s) {
  return make_rational(i * j * s - i * l * q, 6) + make_rational(j * l * p, 2) +
         make_rational(j * p * s - l * p * q, 3);
}

}  // namespace

AElement mul_a(const AMonomial& x, const AMonomial& y) {
  AElement out;
  const I i = x.a(), j = x.b(), k = x.c(), l = x.d();
  const I p = y.a(), q = y.b(), r = y.c(), s = y.d();

  if (x.type() == AType::one && y.type() == AType::one) return out;

  if (x.type() == AType::two && y.type() == AType::one) {
    if (k == 0) out.add_term(AMonomial::type1(i + p, j + q, l + s), 1);
    return out;
  }
  if (x.type() == AType::one && y.type() == AType::two) {
    if (r == 0) out.add_term(AMonomial::type1(i + p, j + q, l + s), 1);
    return out;
  }

  for (I mu = 0; mu <= std::min(j, p); ++mu) {
    Integer coeff = factorial(mu) * binomial(j, mu) * binomial(p, mu);
    if (mu % 2 != 0) coeff = -coeff;
    out.add_term(AMonomial::type2(i + p - mu, j + q - mu, k + r + mu, l + s), Rational(coeff));
  }
  if (k == 0 && r == 0) {
    const Rational c1 = e_correction(i, j, l, p, q, s);
    if (c1 != 0)
      out.add_term(AMonomial::type1(exponent_or_throw(i + p - 1), exponent_or_throw(j + q - 1),
                                    exponent_or_throw(l + s - 1)),
                   c1);
  }
  if (k == 0 && r == 1 && l != 0)
    out.add_term(AMonomial::type1(i + p, j + q, exponent_or_throw(l + s - 1)), Rational(-l));
  return out;
}

AElement mul_a(const AElement& x, const AElement& y) {
  AElement out;
  for (const auto& [xm, xc] : x.terms())
    for (const auto& [ym, yc] : y.terms()) out.add_scaled(xc * yc, mul_a(xm, ym));
  return out;
}

AElement commutator_a(const AElement& x, const AElement& y) { return mul_a(x, y) - mul_a(y, x); }

AElement associator_a(const AElement& x, const AElement& y, const AElement& z) {
  return mul_a(mul_a(x, y), z) - mul_a(x, mul_a(y, z));
}

AElement type2_associator_closed_form(const AMonomial& x, const AMonomial& y, const AMonomial& z) {
  if (x.type() != AType::two || y.type() != AType::two || z.type() != AType::two)
    throw std::invalid_argument("closed-form associator needs type-2 monomials");
  AElement out;
  if (x.c() != 0 || y.c() != 0 || z.c() != 0) return out;
  const I i = x.a(), j = x.b(), l = x.d();
  const I p = y.a(), q = y.b(), s = y.d();
  const I v = z.a(), w = z.b(), yd = z.d();
  const I weight = i * q * yd - i * s * w - j * p * yd + j * s * v + l * p * w - l * q * v;
  if (weight == 0) return out;
  out.add_term(AMonomial::type1(exponent_or_throw(i + p + v - 1), exponent_or_throw(j + q + w - 1),
                                exponent_or_throw(l + s + yd - 1)),
               make_rational(weight, 6));
  return out;
}

SpecialityReport check_speciality() {
  SpecialityReport report;
  auto fail = [&report](std::string what) {
    if (report.passed) {
      report.passed = false;
      report.violation = std::move(what);
    }
  };
  for (Letter v : kLetters) {
    ++report.checks;
    if (in_ideal_j(Monomial::generator(v)))
      fail(std::string("generator ") + to_char(v) + " lies in the alternator ideal");
  }
  for (Letter x : kLetters) {
    for (Letter y : kLetters) {
      ++report.checks;
      const AElement got = commutator_a(AElement(*AMonomial::from_pbw(Monomial::generator(x))),
                                        AElement(*AMonomial::from_pbw(Monomial::generator(y))));
      const AElement want =
          project(embed(bracket_m(MalcevVector::basis(x), MalcevVector::basis(y))));
      if (got != want)
        fail(std::string("commutator [") + to_char(x) + "," + to_char(y) +
             "] in A(M) does not match the bracket of M");
    }
  }
  return report;
}

}  // namespace malcev5
