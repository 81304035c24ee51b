#include "malcev5/element.hpp"

#include <algorithm>

namespace malcev5 {

UElement embed(const MalcevVector& x) {
  UElement out;
  for (Letter v : kLetters) out.add_term(Monomial::generator(v), x[v]);
  return out;
}

std::optional<MalcevVector> as_malcev_vector(const UElement& x) {
  MalcevVector out;
  for (const auto& [mono, coeff] : x.terms()) {
    if (mono.degree() != 1) return std::nullopt;
    out[*mono.leading_letter()] = coeff;
  }
  return out;
}

UElement add(const UElement& x, const UElement& y) { return x + y; }

UElement scale(const Rational& c, const UElement& x) { return c * x; }

std::uint64_t max_degree(const UElement& x) {
  std::uint64_t out = 0;
  for (const auto& [mono, coeff] : x.terms()) out = std::max(out, mono.degree());
  return out;
}

}  // namespace malcev5
