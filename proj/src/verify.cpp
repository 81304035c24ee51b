#include "malcev5/verify.hpp"

#include <omp.h>

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <unordered_map>
#include <random>
#include <sstream>

#include "malcev5/alternative.hpp"
#include "malcev5/combinatorics.hpp"
#include "malcev5/operator.hpp"
#include "malcev5/reference.hpp"
#include "malcev5/text.hpp"

namespace malcev5 {

namespace {

using Failure = std::optional<std::string>;

template <typename Context, typename Check>
Failure guarded(Check& check, Context& ctx, std::size_t index) {
  try {
    return check(ctx, index);
  } catch (const std::exception& err) {
    return std::string("exception: ") + err.what();
  }
}

// Runs check(ctx, i) for i in [0, count) and returns the failure with the
// smallest index, so the answer does not depend on scheduling. Each thread
// owns one Context.
template <typename MakeContext, typename Check>
Failure first_failure(std::size_t count, Execution execution, MakeContext make_context, Check check) {
  if (execution == Execution::serial) {
    auto ctx = make_context();
    for (std::size_t i = 0; i < count; ++i)
      if (auto msg = guarded(check, ctx, i)) return msg;
    return std::nullopt;
  }

  std::atomic<std::size_t> best{count};
  Failure best_msg;
#pragma omp parallel
  {
    auto ctx = make_context();
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t n = 0; n < static_cast<std::int64_t>(count); ++n) {
      const auto i = static_cast<std::size_t>(n);
      if (i > best.load(std::memory_order_relaxed)) continue;
      if (auto msg = guarded(check, ctx, i)) {
#pragma omp critical(malcev5_first_failure)
        {
          if (i < best.load()) {
            best.store(i);
            best_msg = std::move(msg);
          }
        }
      }
    }
  }
  return best_msg;
}

struct NoContext {};
auto no_context() { return NoContext{}; }

std::string show(const UElement& x) { return format_element(x); }
std::string show(const AElement& x) { return format_element(x); }
std::string show(const Monomial& x) { return to_string(x); }

std::string show(const AMonomial& x) { return to_string(x.pbw()); }

std::string show(const MalcevVector& x) { return format_element(embed(x)); }

// ---------------------------------------------------------------------------
// Seeded samples. Draws use the raw 64-bit engine output so sequences are the
// same on every standard library.

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  Rational nonzero_rational() {
    std::int64_t num = 0;
    while (num == 0) num = uniform(-9, 9);
    return make_rational(num, uniform(1, 5));
  }

  Rational rational() { return make_rational(uniform(-9, 9), uniform(1, 5)); }

  MalcevVector malcev_vector() {
    MalcevVector out;
    for (Letter v : kLetters) out[v] = rational();
    return out;
  }

  AElement a_element(unsigned max_terms, Exponent max_exp) {
    AElement out;
    const auto terms = uniform(1, max_terms);
    for (std::int64_t t = 0; t < terms; ++t) out.add_term(a_monomial(max_exp), nonzero_rational());
    return out;
  }

  AMonomial a_monomial(Exponent max_exp) {
    auto draw = [&] { return static_cast<Exponent>(uniform(0, max_exp)); };
    if (uniform(0, 1) == 0) {
      const Exponent i = draw(), j = draw(), l = draw();
      return AMonomial::type1(i, j, l);
    }
    const Exponent i = draw(), j = draw(), k = draw(), l = draw();
    return AMonomial::type2(i, j, k, l);
  }

  AMonomial type1_monomial(Exponent max_exp) {
    const Exponent i = static_cast<Exponent>(uniform(0, max_exp));
    const Exponent j = static_cast<Exponent>(uniform(0, max_exp));
    const Exponent l = static_cast<Exponent>(uniform(0, max_exp));
    return AMonomial::type1(i, j, l);
  }

  Operator small_operator() {
    Operator out;
    const auto terms = uniform(1, 3);
    for (std::int64_t t = 0; t < terms; ++t) {
      OperatorWord w;
      for (auto& x : w.mul) x = static_cast<Exponent>(uniform(0, 2));
      for (auto& x : w.der) x = static_cast<Exponent>(uniform(0, 2));
      out.add_term(w, nonzero_rational());
    }
    return out;
  }

  UElement small_element() {
    UElement out;
    const auto terms = uniform(1, 3);
    for (std::int64_t t = 0; t < terms; ++t) {
      ExponentTuple exps;
      for (auto& x : exps) x = static_cast<Exponent>(uniform(0, 3));
      out.add_term(Monomial(exps), nonzero_rational());
    }
    return out;
  }

  reference::StandardWord standard_word() {
    auto draw = [&] { return static_cast<unsigned>(uniform(0, 3)); };
    reference::StandardWord w;
    w.s = draw(), w.t = draw(), w.u = draw(), w.v = draw();
    w.w = draw(), w.x = draw(), w.y = draw(), w.z = draw();
    return w;
  }

 private:
  std::mt19937_64 engine_;
};

std::string show(const reference::StandardWord& w) {
  std::ostringstream os;
  os << "L(a)^" << w.s << " D_a^" << w.t << " L(b)^" << w.u << " D_b^" << w.v << " L(c)^" << w.w
     << " D_d^" << w.x << " L(d)^" << w.y << " L(e)^" << w.z;
  return os.str();
}

// Per-thread cache of products of A(M) basis monomials, keyed by the ten
// exponents packed six bits apiece. Larger exponents bypass the cache.
class AProductMemo {
 public:
  AElement multiply(const AElement& x, const AElement& y) {
    AElement out;
    for (const auto& [xm, xc] : x.terms())
      for (const auto& [ym, yc] : y.terms()) {
        const auto key = pack(xm, ym);
        if (!key) {
          out.add_scaled(xc * yc, mul_a(xm, ym));
          continue;
        }
        auto [it, inserted] = cache_.try_emplace(*key);
        if (inserted) it->second = mul_a(xm, ym);
        out.add_scaled(xc * yc, it->second);
      }
    return out;
  }

 private:
  static std::optional<std::uint64_t> pack(const AMonomial& x, const AMonomial& y) {
    std::uint64_t key = 0;
    for (const AMonomial* m : {&x, &y})
      for (Exponent e : m->pbw().exponents()) {
        if (e >= 64) return std::nullopt;
        key = (key << 6) | e;
      }
    return key;
  }

  std::unordered_map<std::uint64_t, AElement> cache_;
};

class Suites {
 public:
  explicit Suites(const CheckParams& params) : params_(params) {}

  void add(CheckReport& report, std::string name, std::size_t cases, Failure failure) {
    report.properties.push_back(PropertyResult{std::move(name), cases, std::move(failure)});
  }

  template <typename MakeContext, typename Check>
  Failure sweep(std::size_t count, MakeContext make_context, Check check) {
    return first_failure(count, params_.execution, make_context, check);
  }

  unsigned degree() const { return params_.max_degree; }
  unsigned lower_degree() const { return params_.max_degree == 0 ? 0 : params_.max_degree - 1; }
  auto make_oracle() const {
    return [limits = params_.limits] { return RecursiveOracle(limits); };
  }

  void oracle(CheckReport& report);
  void operators(CheckReport& report);
  void nucleus(CheckReport& report);
  void malcev(CheckReport& report);
  void alternative(CheckReport& report);
  void homomorphism(CheckReport& report);
  void special(CheckReport& report);

 private:
  const CheckParams& params_;
};

// Leading-term property: every monomial of xy has degree <= |x| + |y| and
// the only one of top degree is the concatenation, with coefficient 1.
Failure check_filtration(const Monomial& x, const Monomial& y, const UElement& product) {
  const auto top = x.degree() + y.degree();
  const Monomial lead = x.concatenated(y);
  for (const auto& [mono, coeff] : product.terms()) {
    if (mono.degree() > top) return "product " + show(x) + " * " + show(y) + " has degree above " + std::to_string(top);
    if (mono.degree() == top && (mono != lead || coeff != 1))
      return "product " + show(x) + " * " + show(y) + " has unexpected top-degree term " + show(mono);
  }
  if (product.coefficient(lead) != 1)
    return "product " + show(x) + " * " + show(y) + " lacks leading term " + show(lead);
  return std::nullopt;
}

void Suites::oracle(CheckReport& report) {
  const auto mons = monomials_up_to_degree(degree());
  const std::size_t n = mons.size();
  const std::string deg = std::to_string(degree());

  add(report, "closed-form = recursive = operator products, degree <= " + deg, n * n,
      sweep(n, make_oracle(), [&](RecursiveOracle& oracle, std::size_t row) -> Failure {
        const Monomial& x = mons[row];
        const Operator lx = l_of_monomial(x);
        for (const Monomial& y : mons) {
          const UElement closed = mul_u_closed(x, y);
          const UElement recursive = oracle.multiply(x, y);
          const UElement via_operator = apply_operator(lx, y);
          if (closed != recursive || closed != via_operator)
            return "x = " + show(x) + ", y = " + show(y) + ": closed " + show(closed) + "; recursive " +
                   show(recursive) + "; operator " + show(via_operator);
        }
        return std::nullopt;
      }));

  add(report, "leading-term filtration of products, degree <= " + deg, n * n,
      sweep(n, no_context, [&](NoContext&, std::size_t row) -> Failure {
        for (const Monomial& y : mons)
          if (auto bad = check_filtration(mons[row], y, mul_u_closed(mons[row], y))) return bad;
        return std::nullopt;
      }));

  add(report, "[x,v] by recursion = bracket_u = rho(v) x, degree <= " + deg, n * kDimension,
      sweep(n, make_oracle(), [&](RecursiveOracle& oracle, std::size_t row) -> Failure {
        const UElement x(mons[row]);
        for (Letter v : kLetters) {
          const UElement recursive = oracle.bracket(mons[row], v);
          const UElement closed = bracket_u(x, generator_element(v));
          const UElement via_rho = apply_operator(rho(v), x);
          if (recursive != closed || recursive != via_rho)
            return "x = " + show(mons[row]) + ", v = " + to_char(v) + ": recursive " + show(recursive) +
                   "; closed " + show(closed) + "; rho " + show(via_rho);
        }
        return std::nullopt;
      }));

  const auto cde = cde_monomials_up_to_degree(degree() + 1);
  add(report, "c,d,e subalgebra matches the single alpha-sum, degree <= " + std::to_string(degree() + 1),
      cde.size() * cde.size(), sweep(cde.size(), no_context, [&](NoContext&, std::size_t row) -> Failure {
        for (const Monomial& y : cde) {
          const UElement got = mul_u_closed(cde[row], y);
          const UElement want = reference::cde_product(cde[row], y);
          if (got != want)
            return "x = " + show(cde[row]) + ", y = " + show(y) + ": got " + show(got) + "; want " + show(want);
        }
        return std::nullopt;
      }));

  const auto cde_small = cde_monomials_up_to_degree(lower_degree());
  const std::size_t m = cde_small.size();
  add(report, "c,d,e subalgebra is associative, degree <= " + std::to_string(lower_degree()), m * m * m,
      sweep(m, [] { return ProductCache{}; }, [&](ProductCache& cache, std::size_t row) -> Failure {
        const UElement x(cde_small[row]);
        for (const Monomial& ym : cde_small)
          for (const Monomial& zm : cde_small) {
            const UElement assoc = cache.associator(x, UElement(ym), UElement(zm));
            if (!assoc.is_zero())
              return "(" + show(cde_small[row]) + ", " + show(ym) + ", " + show(zm) + ") = " + show(assoc);
          }
        return std::nullopt;
      }));

  std::vector<Monomial> bcde;
  for (const Monomial& x : mons)
    if (x[Letter::a] == 0) bcde.push_back(x);
  add(report, "[b^q c^r d^s e^t, a] closed formula, degree <= " + deg, bcde.size(),
      sweep(bcde.size(), no_context, [&](NoContext&, std::size_t idx) -> Failure {
        const Monomial& x = bcde[idx];
        const UElement got = bracket_u(UElement(x), generator_element(Letter::a));
        const UElement want =
            reference::bcde_bracket_with_a(x[Letter::b], x[Letter::c], x[Letter::d], x[Letter::e]);
        if (got != want) return "x = " + show(x) + ": got " + show(got) + "; want " + show(want);
        return std::nullopt;
      }));

  {
    const UElement abd = parse_element("abd");
    const UElement got = associator_u(abd, abd, abd);
    const UElement want = parse_element("1/6 abcd^2e - 1/6 abde^2 - 1/6 c^2d^2e + 11/36 cde^2 - 1/12 e^3");
    Failure failure;
    if (got != want) failure = "(abd,abd,abd) = " + show(got);
    add(report, "(abd,abd,abd) witnesses non-power-associativity", 1, failure);
  }
  {
    const UElement got1 = associator_u(parse_element("ab"), parse_element("ab"), parse_element("d"));
    const UElement got2 = associator_u(parse_element("bd"), parse_element("bd"), parse_element("a^2"));
    Failure failure;
    if (got1 != parse_element("-1/6 ce")) failure = "(ab,ab,d) = " + show(got1);
    else if (got2 != parse_element("1/18 e^2")) failure = "(bd,bd,a^2) = " + show(got2);
    add(report, "alternators (ab,ab,d) = -1/6 ce and (bd,bd,a^2) = 1/18 e^2", 2, failure);
  }
}

void Suites::operators(CheckReport& report) {
  const unsigned wide = degree() + 1;
  const auto mons = monomials_up_to_degree(wide);
  std::vector<Operator> rhos, lmuls;
  for (Letter v : kLetters) {
    rhos.push_back(rho(v));
    lmuls.push_back(lmul(v));
  }

  add(report, "rho(v) and L(v) agree with recursive brackets and products, degree <= " + std::to_string(wide),
      mons.size() * kDimension * 2,
      sweep(mons.size(), make_oracle(), [&](RecursiveOracle& oracle, std::size_t row) -> Failure {
        const Monomial& x = mons[row];
        for (Letter v : kLetters) {
          const UElement br = apply_operator(rhos[index_of(v)], x);
          const UElement want_br = oracle.bracket(x, v);
          if (br != want_br)
            return std::string("rho(") + to_char(v) + ") " + show(x) + " = " + show(br) + "; recursive [x,v] = " +
                   show(want_br);
          const UElement prod = apply_operator(lmuls[index_of(v)], x);
          const UElement want_prod = oracle.left_multiply(v, x);
          if (prod != want_prod)
            return std::string("L(") + to_char(v) + ") " + show(x) + " = " + show(prod) + "; recursive v x = " +
                   show(want_prod);
        }
        return std::nullopt;
      }));

  {
    const auto table = reference::nonzero_commutator_table();
    const auto ops = reference::generator_operators();
    Failure failure;
    std::size_t cases = 0;
    for (const auto& entry : table) {
      ++cases;
      const Operator got = commutator(entry.left, entry.right);
      if (!failure && got != entry.expected)
        failure = entry.label + " = " + to_string(got) + "; table says " + to_string(entry.expected);
    }
    // Pairs absent from the table must commute.
    for (std::size_t p = 0; p < ops.size(); ++p) {
      for (std::size_t q = p + 1; q < ops.size(); ++q) {
        bool listed = false;
        for (const auto& entry : table)
          if (entry.label == "[" + ops[p].first + "," + ops[q].first + "]" ||
              entry.label == "[" + ops[q].first + "," + ops[p].first + "]")
            listed = true;
        if (listed) continue;
        ++cases;
        const Operator got = commutator(ops[p].second, ops[q].second);
        if (!failure && !got.is_zero())
          failure = "[" + ops[p].first + "," + ops[q].first + "] = " + to_string(got) + ", expected 0";
      }
    }
    add(report, "commutator table of L(v) and rho(v)", cases, failure);
  }

  {
    Sampler sampler(params_.seed);
    std::vector<reference::StandardWord> words;
    for (std::size_t s = 0; s < params_.samples; ++s) words.push_back(sampler.standard_word());
    const Operator la = lmul(Letter::a), ra = rho(Letter::a);
    add(report, "straightening 2L(a)X - XL(a) - X rho(a) + rho(a)X on random standard words", words.size(),
        sweep(words.size(), no_context, [&](NoContext&, std::size_t idx) -> Failure {
          const Operator x = reference::standard_word(words[idx]);
          Operator lhs = Rational(2) * compose(la, x);
          lhs -= compose(x, la);
          lhs -= compose(x, ra);
          lhs += compose(ra, x);
          const Operator rhs = reference::straightening_rhs(words[idx]);
          if (lhs != rhs) return "X = " + show(words[idx]) + ": sides differ by " + to_string(lhs - rhs);
          return std::nullopt;
        }));
  }

  {
    Failure failure;
    for (unsigned u = 0; u <= degree() && !failure; ++u) {
      if (power(lmul(Letter::b), u) != reference::lb_power_expansion(u))
        failure = "L(b)^" + std::to_string(u) + " differs from its trinomial expansion";
      else if (power(lmul(Letter::d), u) != reference::ld_power_expansion(u))
        failure = "L(d)^" + std::to_string(u) + " differs from its trinomial expansion";
    }
    add(report, "powers of L(b) and L(d), exponent <= " + std::to_string(degree()), 2 * (degree() + 1), failure);
  }

  const auto base = monomials_up_to_degree(degree());
  add(report, "closed L(x) = composition recursion, degree <= " + std::to_string(degree()), base.size(),
      sweep(base.size(), no_context, [&](NoContext&, std::size_t idx) -> Failure {
        const Monomial& x = base[idx];
        const Operator closed = l_of_monomial(x);
        if (closed != reference::l_by_composition(x)) return "L(" + show(x) + ") differs from the composed operator";
        if (x[Letter::a] == 0 && x[Letter::b] == 0 &&
            closed != reference::cde_operator_product(x[Letter::c], x[Letter::d], x[Letter::e]))
          return "L(" + show(x) + ") differs from L(c)^k L(d)^l L(e)^m";
        if (x[Letter::a] == 0 &&
            closed != reference::bcde_operator_expansion(x[Letter::b], x[Letter::c], x[Letter::d], x[Letter::e]))
          return "L(" + show(x) + ") differs from the alpha-sum over L(b), L(c), L(d), L(e)";
        return std::nullopt;
      }));

  {
    Sampler sampler(params_.seed + 1);
    struct Triple {
      Operator f, g, h;
      UElement x;
    };
    std::vector<Triple> triples;
    for (std::size_t s = 0; s < params_.samples; ++s) {
      Operator f = sampler.small_operator(), g = sampler.small_operator(), h = sampler.small_operator();
      triples.push_back({std::move(f), std::move(g), std::move(h), sampler.small_element()});
    }
    add(report, "compose is associative and apply is a homomorphism", triples.size(),
        sweep(triples.size(), no_context, [&](NoContext&, std::size_t idx) -> Failure {
          const auto& [f, g, h, x] = triples[idx];
          if (compose(compose(f, g), h) != compose(f, compose(g, h)))
            return "sample " + std::to_string(idx) + ": (fg)h != f(gh) for f = " + to_string(f) +
                   ", g = " + to_string(g) + ", h = " + to_string(h);
          if (apply_operator(compose(f, g), x) != apply_operator(f, apply_operator(g, x)))
            return "sample " + std::to_string(idx) + ": (fg)x != f(gx) for f = " + to_string(f) +
                   ", g = " + to_string(g) + ", x = " + show(x);
          return std::nullopt;
        }));
  }
}

void Suites::nucleus(CheckReport& report) {
  const auto mons = monomials_up_to_degree(lower_degree());
  const std::size_t n = mons.size();
  const std::string deg = std::to_string(lower_degree());

  add(report, "(g,x,y) = -(x,g,y) = (x,y,g) for generators g, degree <= " + deg, kDimension * n * n,
      sweep(kDimension * n, [] { return ProductCache{}; }, [&](ProductCache& cache, std::size_t row) -> Failure {
        const Letter gl = letter_at(row / n);
        const UElement g = generator_element(gl);
        const UElement x(mons[row % n]);
        for (const Monomial& ym : mons) {
          const UElement y(ym);
          const UElement first = cache.associator(g, x, y);
          const UElement middle = cache.associator(x, g, y);
          const UElement last = cache.associator(x, y, g);
          if (first != -middle || first != last)
            return std::string("g = ") + to_char(gl) + ", x = " + show(mons[row % n]) + ", y = " + show(ym) +
                   ": (g,x,y) = " + show(first) + "; (x,g,y) = " + show(middle) + "; (x,y,g) = " + show(last);
        }
        return std::nullopt;
      }));

  add(report, "(f,g,y) = 1/6[[y,f],g] - 1/6[[y,g],f] - 1/6[y,[f,g]], degree <= " + deg,
      kDimension * kDimension * n,
      sweep(kDimension * kDimension, no_context, [&](NoContext&, std::size_t row) -> Failure {
        const Letter f = letter_at(row / kDimension), g = letter_at(row % kDimension);
        for (const Monomial& ym : mons) {
          const UElement y(ym);
          const UElement got = associator_u(generator_element(f), generator_element(g), y);
          const UElement want = reference::associator_by_commutators(f, g, y);
          if (got != want)
            return std::string("f = ") + to_char(f) + ", g = " + to_char(g) + ", y = " + show(ym) + ": " +
                   show(got) + " vs " + show(want);
        }
        return std::nullopt;
      }));
}

void Suites::malcev(CheckReport& report) {
  {
    Failure failure;
    for (Letter x : kLetters)
      for (Letter y : kLetters) {
        const UElement got = bracket_u(generator_element(x), generator_element(y));
        const UElement want = embed(bracket_m(MalcevVector::basis(x), MalcevVector::basis(y)));
        if (!failure && got != want)
          failure = std::string("[") + to_char(x) + "," + to_char(y) + "] in U(M) = " + show(got) + "; in M " + show(want);
      }
    add(report, "bracket_u on generators reproduces the bracket of M", kDimension * kDimension, failure);
  }

  {
    Sampler sampler(params_.seed + 2);
    struct Triple {
      MalcevVector x, y, z;
    };
    std::vector<Triple> triples;
    for (std::size_t s = 0; s < params_.samples; ++s) {
      MalcevVector x = sampler.malcev_vector(), y = sampler.malcev_vector(), z = sampler.malcev_vector();
      triples.push_back({std::move(x), std::move(y), std::move(z)});
    }
    add(report, "Malcev identity [J(x,y,z),x] = J(x,y,[x,z]) on random degree-1 triples", triples.size(),
        sweep(triples.size(), no_context, [&](NoContext&, std::size_t idx) -> Failure {
          const auto& [x, y, z] = triples[idx];
          const UElement ux = embed(x), uy = embed(y), uz = embed(z);
          const UElement lhs = bracket_u(jacobian_u(ux, uy, uz), ux);
          const UElement rhs = jacobian_u(ux, uy, bracket_u(ux, uz));
          const UElement lhs_m = embed(bracket_m(jacobian_m(x, y, z), x));
          const UElement rhs_m = embed(jacobian_m(x, y, bracket_m(x, z)));
          if (lhs != rhs || lhs != lhs_m || lhs_m != rhs_m)
            return "x = " + show(x) + ", y = " + show(y) + ", z = " + show(z) + ": U(M) sides " + show(lhs) +
                   " / " + show(rhs) + "; M sides " + show(lhs_m) + " / " + show(rhs_m);
          return std::nullopt;
        }));
  }

  {
    using enum Letter;
    Failure failure;
    const UElement jabd = jacobian_u(generator_element(a), generator_element(b), generator_element(d));
    const UElement jcde = jacobian_u(generator_element(c), generator_element(d), generator_element(e));
    if (jabd != generator_element(e)) failure = "J(a,b,d) = " + show(jabd) + ", expected e";
    else if (!jcde.is_zero()) failure = "J(c,d,e) = " + show(jcde) + ", expected 0";
    add(report, "J(a,b,d) = e (M is not Lie) and J(c,d,e) = 0", 2, failure);
  }
}

void Suites::alternative(CheckReport& report) {
  {
    Sampler sampler(params_.seed + 3);
    std::vector<std::pair<AElement, AElement>> pairs;
    for (std::size_t s = 0; s < params_.samples; ++s) {
      AElement x = sampler.a_element(5, 4);
      pairs.emplace_back(std::move(x), sampler.a_element(5, 4));
    }
    add(report, "(x,x,y) = (y,x,x) = 0 on random elements of A(M)", pairs.size(),
        sweep(pairs.size(), no_context, [&](NoContext&, std::size_t idx) -> Failure {
          const auto& [x, y] = pairs[idx];
          const AElement left = associator_a(x, x, y);
          if (!left.is_zero()) return "x = " + show(x) + ", y = " + show(y) + ": (x,x,y) = " + show(left);
          const AElement right = associator_a(y, x, x);
          if (!right.is_zero()) return "x = " + show(x) + ", y = " + show(y) + ": (y,x,x) = " + show(right);
          return std::nullopt;
        }));
  }

  {
    constexpr Exponent kMaxExp = 3;
    std::vector<AMonomial> type2;
    for (Exponent i = 0; i <= kMaxExp; ++i)
      for (Exponent j = 0; j <= kMaxExp; ++j)
        for (Exponent k = 0; k <= kMaxExp; ++k)
          for (Exponent l = 0; l <= kMaxExp; ++l) type2.push_back(AMonomial::type2(i, j, k, l));
    const std::size_t n = type2.size();
    // Products of basis monomials repeat heavily across the sweep, so each
    // thread memoizes them and the right-hand products yz are tabulated once.
    std::vector<AElement> right_products(n * n);
    sweep(n, no_context, [&](NoContext&, std::size_t row) -> Failure {
      for (std::size_t col = 0; col < n; ++col) right_products[row * n + col] = mul_a(type2[row], type2[col]);
      return std::nullopt;
    });
    add(report, "type-2 associators match the closed form and alternate, exponents <= 3", n * n * n,
        sweep(n, [] { return AProductMemo{}; }, [&](AProductMemo& memo, std::size_t row) -> Failure {
          const AMonomial& x = type2[row];
          const AElement ax(x);
          for (std::size_t yi = 0; yi < n; ++yi) {
            const AMonomial& y = type2[yi];
            const AElement& xy = right_products[row * n + yi];
            for (std::size_t zi = 0; zi < n; ++zi) {
              const AMonomial& z = type2[zi];
              const AElement got = memo.multiply(xy, AElement(z)) - memo.multiply(ax, right_products[yi * n + zi]);
              const AElement want = type2_associator_closed_form(x, y, z);
              if (got != want)
                return "(" + show(x) + ", " + show(y) + ", " + show(z) + ") = " + show(got) + "; closed form " +
                       show(want);
              if (type2_associator_closed_form(y, x, z) != -want || type2_associator_closed_form(x, z, y) != -want)
                return "associator of (" + show(x) + ", " + show(y) + ", " + show(z) + ") does not alternate";
            }
          }
          return std::nullopt;
        }));
  }

  {
    Sampler sampler(params_.seed + 4);
    struct Triple {
      AMonomial m1, m2, m3;
    };
    std::vector<Triple> triples;
    for (std::size_t s = 0; s < params_.samples; ++s) {
      AMonomial t1 = sampler.type1_monomial(3);
      AMonomial p = sampler.a_monomial(3), q = sampler.a_monomial(3);
      switch (s % 3) {
        case 0: triples.push_back({t1, p, q}); break;
        case 1: triples.push_back({p, t1, q}); break;
        default: triples.push_back({p, q, t1}); break;
      }
    }
    add(report, "associators with a type-1 argument vanish", triples.size(),
        sweep(triples.size(), no_context, [&](NoContext&, std::size_t idx) -> Failure {
          const auto& [m1, m2, m3] = triples[idx];
          const AElement got = associator_a(AElement(m1), AElement(m2), AElement(m3));
          if (!got.is_zero())
            return "(" + show(m1) + ", " + show(m2) + ", " + show(m3) + ") = " + show(got);
          return std::nullopt;
        }));
  }

  {
    Failure failure;
    const UElement first = associator_u(parse_element("ab"), parse_element("ab"), parse_element("d"));
    const UElement second = associator_u(parse_element("bd"), parse_element("bd"), parse_element("a^2"));
    if (first.is_zero() || second.is_zero()) failure = "an alternator vanished already in U(M)";
    else if (!project(first).is_zero()) failure = "(ab,ab,d) projects to " + show(project(first));
    else if (!project(second).is_zero()) failure = "(bd,bd,a^2) projects to " + show(project(second));
    add(report, "the alternators (ab,ab,d), (bd,bd,a^2) are nonzero in U(M) and vanish in A(M)", 2, failure);
  }
}

void Suites::homomorphism(CheckReport& report) {
  const auto mons = monomials_up_to_degree(degree());
  const std::size_t n = mons.size();
  add(report, "project(xy) = project(x) project(y), degree <= " + std::to_string(degree()), n * n,
      sweep(n, no_context, [&](NoContext&, std::size_t row) -> Failure {
        const UElement x(mons[row]);
        const AElement px = project(x);
        for (const Monomial& ym : mons) {
          const UElement y(ym);
          const AElement got = project(mul_u(x, y));
          const AElement want = mul_a(px, project(y));
          if (got != want)
            return "x = " + show(mons[row]) + ", y = " + show(ym) + ": project(xy) = " + show(got) +
                   "; product in A(M) = " + show(want);
        }
        return std::nullopt;
      }));
}

void Suites::special(CheckReport& report) {
  const SpecialityReport speciality = check_speciality();
  Failure failure;
  if (!speciality.passed) failure = speciality.violation;
  add(report, "M embeds in A(M)^-: no generator in J, commutators reproduce the bracket table",
      speciality.checks, failure);
}

}  // namespace

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::oracle: return "oracle";
    case Suite::operators: return "operators";
    case Suite::nucleus: return "nucleus";
    case Suite::malcev: return "malcev";
    case Suite::alternative: return "alternative";
    case Suite::homomorphism: return "homomorphism";
    case Suite::special: return "special";
  }
  return "unknown";
}

std::optional<Suite> suite_from_name(std::string_view name) {
  for (Suite s : kAllSuites)
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

bool CheckReport::passed() const {
  for (const auto& p : properties)
    if (!p.passed()) return false;
  return true;
}

CheckReport run_check(Suite suite, const CheckParams& params) {
  CheckReport report;
  report.suite = std::string(suite_name(suite));
  report.params = params;
  const auto start = std::chrono::steady_clock::now();
  Suites suites(params);
  switch (suite) {
    case Suite::oracle: suites.oracle(report); break;
    case Suite::operators: suites.operators(report); break;
    case Suite::nucleus: suites.nucleus(report); break;
    case Suite::malcev: suites.malcev(report); break;
    case Suite::alternative: suites.alternative(report); break;
    case Suite::homomorphism: suites.homomorphism(report); break;
    case Suite::special: suites.special(report); break;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format_report(const CheckReport& report) {
  std::ostringstream os;
  os << "check " << report.suite << " (max-degree " << report.params.max_degree << ", samples "
     << report.params.samples << ", seed " << report.params.seed << ")\n";
  for (const auto& p : report.properties) {
    os << "  " << (p.passed() ? "pass" : "FAIL") << "  " << p.name << " [" << p.cases << " cases]\n";
    if (!p.passed()) os << "        counterexample: " << *p.counterexample << "\n";
  }
  os << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::vector<UElement> product_table(std::span<const Monomial> left, std::span<const Monomial> right,
                                    Execution execution) {
  const std::size_t cols = right.size();
  std::vector<UElement> table(left.size() * cols);
  if (execution == Execution::serial) {
    for (std::size_t r = 0; r < left.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) table[r * cols + c] = mul_u_closed(left[r], right[c]);
    return table;
  }
  const auto total = static_cast<std::int64_t>(table.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const auto i = static_cast<std::size_t>(idx);
    table[i] = mul_u_closed(left[i / cols], right[i % cols]);
  }
  return table;
}

}  // namespace malcev5
