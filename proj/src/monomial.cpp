#include "malcev5/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace malcev5 {

std::optional<Letter> Monomial::leading_letter() const {
  for (std::size_t i = 0; i < kDimension; ++i)
    if (exps_[i] != 0) return letter_at(i);
  return std::nullopt;
}

Monomial Monomial::without(Letter v) const {
  if (exps_[index_of(v)] == 0) throw std::logic_error("monomial has no factor to remove");
  Monomial out = *this;
  --out.exps_[index_of(v)];
  return out;
}

Monomial Monomial::with(Letter v) const {
  Monomial out = *this;
  ++out.exps_[index_of(v)];
  return out;
}

Monomial Monomial::concatenated(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < kDimension; ++i) out.exps_[i] += other.exps_[i];
  return out;
}

namespace {

void enumerate(std::size_t slot, unsigned remaining, ExponentTuple& current,
               std::vector<Monomial>& out, std::size_t first_slot) {
  if (slot == kDimension - 1) {
    current[slot] = remaining;
    out.emplace_back(current);
    return;
  }
  if (slot < first_slot) {
    current[slot] = 0;
    enumerate(slot + 1, remaining, current, out, first_slot);
    return;
  }
  for (unsigned x = remaining + 1; x-- > 0;) {
    current[slot] = x;
    enumerate(slot + 1, remaining - x, current, out, first_slot);
  }
}

std::vector<Monomial> up_to_degree(unsigned max_degree, std::size_t first_slot) {
  std::vector<Monomial> out;
  for (unsigned deg = 0; deg <= max_degree; ++deg) {
    ExponentTuple current{};
    enumerate(0, deg, current, out, first_slot);
  }
  return out;
}

}  // namespace

std::vector<Monomial> monomials_up_to_degree(unsigned max_degree) {
  return up_to_degree(max_degree, 0);
}

std::vector<Monomial> cde_monomials_up_to_degree(unsigned max_degree) {
  return up_to_degree(max_degree, index_of(Letter::c));
}

std::string to_string(const Monomial& x) {
  if (x.is_unit()) return "1";
  std::string out;
  for (Letter v : kLetters) {
    const Exponent n = x[v];
    if (n == 0) continue;
    out += to_char(v);
    if (n > 1) out += "^" + std::to_string(n);
  }
  return out;
}

}  // namespace malcev5
