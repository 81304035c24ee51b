#include "malcev5/envelope.hpp"

#include <cstdint>

#include "malcev5/combinatorics.hpp"

namespace malcev5 {

UElement mul_u_closed(const Monomial& x, const Monomial& y) {
  using I = std::int64_t;
  const I i = x[Letter::a], j = x[Letter::b], k = x[Letter::c], l = x[Letter::d],
          m = x[Letter::e];
  const I p = y[Letter::a], q = y[Letter::b], r = y[Letter::c], s = y[Letter::d],
          t = y[Letter::e];

  UElement out;
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
              const I b_rest = j - alpha - eps - zeta;
              const Integer r_factor = multinomial(j, {alpha, delta, eps, zeta});
              const I d_room = l - alpha - (gamma - delta);
              for (I eta = 0; eta <= d_room; ++eta) {
                for (I theta = 0; theta <= d_room - eta && theta <= r; ++theta) {
                  const I der_b = l - alpha - eta - theta;
                  const I der_a = j - beta - eps + der_b;
                  if (der_b > q || der_a > p) continue;
                  const Integer s_factor = multinomial(l, {alpha, gamma - delta, eta, theta});
                  const Integer target = falling_factorial(p, der_a) * falling_factorial(q, der_b) *
                                         falling_factorial(r, theta);
                  for (I lambda = 0; lambda <= eta && lambda <= b_rest; ++lambda) {
                    const I der_d = b_rest - lambda;
                    if (der_d > s) continue;
                    Integer num = alpha_fact * q_factor * p_factor * r_factor * s_factor * target *
                                  factorial(lambda) * binomial(b_rest, lambda) *
                                  binomial(eta, lambda) * falling_factorial(s, der_d);
                    if ((beta + zeta + l - alpha - gamma - eta) % 2 != 0) num = -num;
                    const Integer den =
                        power(2, alpha + gamma) * power(3, j - eps - zeta + l - alpha - eta - theta);
                    const Monomial term(static_cast<Exponent>(i - beta + p - der_a),
                                        static_cast<Exponent>(eps + q - der_b),
                                        static_cast<Exponent>(zeta + k + r - theta),
                                        static_cast<Exponent>(eta - lambda + s - der_d),
                                        static_cast<Exponent>(b_rest + l - eta + m + t));
                    out.add_term(term, make_rational(num, den));
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

UElement mul_u(const UElement& x, const UElement& y) {
  UElement out;
  for (const auto& [xm, xc] : x.terms())
    for (const auto& [ym, yc] : y.terms()) out.add_scaled(xc * yc, mul_u_closed(xm, ym));
  return out;
}

UElement bracket_u(const UElement& x, const UElement& y) { return mul_u(x, y) - mul_u(y, x); }

UElement associator_u(const UElement& x, const UElement& y, const UElement& z) {
  return mul_u(mul_u(x, y), z) - mul_u(x, mul_u(y, z));
}

UElement jacobian_u(const UElement& x, const UElement& y, const UElement& z) {
  return bracket_u(bracket_u(x, y), z) + bracket_u(bracket_u(y, z), x) +
         bracket_u(bracket_u(z, x), y);
}

// ---------------------------------------------------------------------------
// RecursiveOracle

class RecursiveOracle::DepthGuard {
 public:
  explicit DepthGuard(RecursiveOracle& owner) : owner_(owner) {
    if (++owner_.depth_ > owner_.limits_.max_depth) {
      --owner_.depth_;
      throw ComputationError("recursive product exceeded the maximum recursion depth");
    }
  }
  ~DepthGuard() { --owner_.depth_; }
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;

 private:
  RecursiveOracle& owner_;
};

template <typename Key>
RecursiveOracle::Shared RecursiveOracle::remember(std::map<Key, Shared>& table, const Key& key,
                                                  UElement value) {
  if (limits_.max_memo_entries != 0 && memo_entries() >= limits_.max_memo_entries) {
    products_.clear();
    left_products_.clear();
    brackets_.clear();
  }
  auto shared = std::make_shared<const UElement>(std::move(value));
  table.emplace(key, shared);
  return shared;
}

RecursiveOracle::Shared RecursiveOracle::bracket_of(const Monomial& x, Letter f) {
  if (auto it = brackets_.find({x, f}); it != brackets_.end()) return it->second;
  DepthGuard guard(*this);

  UElement out;
  if (x.degree() == 1) {
    if (auto br = bracket_letters(*x.leading_letter(), f))
      out.add_term(Monomial::generator(br->second), br->first);
  } else if (x.degree() >= 2) {
    // [gy, f] = [g,f]y + g[y,f] + 1/2[[y,f],g] - 1/2[[y,g],f] - 1/2[y,[f,g]]
    const Letter g = *x.leading_letter();
    const Monomial y = x.without(g);
    const Rational half = make_rational(1, 2);
    if (auto gf = bracket_letters(g, f)) out.add_scaled(gf->first, *left_product_of(gf->second, y));
    const UElement yf = *bracket_of(y, f);
    out += left_multiply(g, yf);
    out.add_scaled(half, bracket(yf, g));
    out.add_scaled(-half, bracket(*bracket_of(y, g), f));
    if (auto fg = bracket_letters(f, g)) out.add_scaled(-half * fg->first, *bracket_of(y, fg->second));
  }
  return remember(brackets_, std::pair{x, f}, std::move(out));
}

RecursiveOracle::Shared RecursiveOracle::left_product_of(Letter f, const Monomial& x) {
  if (auto it = left_products_.find({f, x}); it != left_products_.end()) return it->second;
  DepthGuard guard(*this);

  UElement out;
  const auto g_opt = x.leading_letter();
  if (!g_opt || index_of(f) <= index_of(*g_opt)) {
    // f x is already an ordered left-tapped monomial.
    out.add_term(x.with(f), 1);
  } else if (x.degree() == 1) {
    // f x = x f + [f, x]
    const Letter g = *g_opt;
    out.add_term(x.with(f), 1);
    if (auto fg = bracket_letters(f, g)) out.add_term(Monomial::generator(fg->second), fg->first);
  } else {
    // f(gy) = g(fy) + [f,g]y - 1/3[[y,f],g] + 1/3[[y,g],f] + 1/3[y,[f,g]]
    const Letter g = *g_opt;
    const Monomial y = x.without(g);
    const Rational third = make_rational(1, 3);
    out += left_multiply(g, *left_product_of(f, y));
    const auto fg = bracket_letters(f, g);
    if (fg) out.add_scaled(fg->first, *left_product_of(fg->second, y));
    out.add_scaled(-third, bracket(*bracket_of(y, f), g));
    out.add_scaled(third, bracket(*bracket_of(y, g), f));
    if (fg) out.add_scaled(third * fg->first, *bracket_of(y, fg->second));
  }
  return remember(left_products_, std::pair{f, x}, std::move(out));
}

RecursiveOracle::Shared RecursiveOracle::product_of(const Monomial& y, const Monomial& z) {
  if (auto it = products_.find({y, z}); it != products_.end()) return it->second;
  DepthGuard guard(*this);

  UElement out;
  if (y.is_unit()) {
    out.add_term(z, 1);
  } else if (y.degree() == 1) {
    out = *left_product_of(*y.leading_letter(), z);
  } else {
    // (fx) z = 2 f(xz) - x(fz) - x[z,f] + [xz,f]
    const Letter f = *y.leading_letter();
    const Monomial x = y.without(f);
    const UElement xz = *product_of(x, z);
    out.add_scaled(2, left_multiply(f, xz));
    out -= multiply(x, *left_product_of(f, z));
    out -= multiply(x, *bracket_of(z, f));
    out += bracket(xz, f);
  }
  return remember(products_, std::pair{y, z}, std::move(out));
}

UElement RecursiveOracle::multiply(const Monomial& y, const UElement& z) {
  UElement out;
  for (const auto& [zm, zc] : z.terms()) out.add_scaled(zc, *product_of(y, zm));
  return out;
}

UElement RecursiveOracle::multiply(const Monomial& y, const Monomial& z) { return *product_of(y, z); }

UElement RecursiveOracle::multiply(const UElement& y, const UElement& z) {
  UElement out;
  for (const auto& [ym, yc] : y.terms())
    for (const auto& [zm, zc] : z.terms()) out.add_scaled(yc * zc, *product_of(ym, zm));
  return out;
}

UElement RecursiveOracle::left_multiply(Letter f, const Monomial& x) { return *left_product_of(f, x); }

UElement RecursiveOracle::left_multiply(Letter f, const UElement& x) {
  UElement out;
  for (const auto& [xm, xc] : x.terms()) out.add_scaled(xc, *left_product_of(f, xm));
  return out;
}

UElement RecursiveOracle::bracket(const Monomial& x, Letter f) { return *bracket_of(x, f); }

UElement RecursiveOracle::bracket(const UElement& x, Letter f) {
  UElement out;
  for (const auto& [xm, xc] : x.terms()) out.add_scaled(xc, *bracket_of(xm, f));
  return out;
}

UElement mul_u_oracle(const UElement& x, const UElement& y, OracleLimits limits) {
  RecursiveOracle oracle(limits);
  return oracle.multiply(x, y);
}

// ---------------------------------------------------------------------------
// ProductCache

const UElement& ProductCache::multiply(const Monomial& x, const Monomial& y) {
  auto it = table_.find({x, y});
  if (it == table_.end()) it = table_.emplace(std::pair{x, y}, mul_u_closed(x, y)).first;
  return it->second;
}

UElement ProductCache::multiply(const UElement& x, const UElement& y) {
  UElement out;
  for (const auto& [xm, xc] : x.terms())
    for (const auto& [ym, yc] : y.terms()) out.add_scaled(xc * yc, multiply(xm, ym));
  return out;
}

UElement ProductCache::bracket(const UElement& x, const UElement& y) {
  return multiply(x, y) - multiply(y, x);
}

UElement ProductCache::associator(const UElement& x, const UElement& y, const UElement& z) {
  return multiply(multiply(x, y), z) - multiply(x, multiply(y, z));
}

}  // namespace malcev5
