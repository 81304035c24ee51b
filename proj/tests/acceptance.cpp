// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "malcev5/alternative.hpp"
#include "malcev5/cli.hpp"
#include "malcev5/envelope.hpp"
#include "malcev5/operator.hpp"
#include "malcev5/reference.hpp"
#include "malcev5/text.hpp"
#include "malcev5/verify.hpp"

using namespace malcev5;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome from_report(const CheckReport& report) {
  if (report.passed()) {
    std::size_t cases = 0;
    for (const auto& p : report.properties) cases += p.cases;
    return {true, std::to_string(report.properties.size()) + " properties, " + std::to_string(cases) + " cases"};
  }
  for (const auto& p : report.properties)
    if (!p.passed()) return {false, p.name + ": " + *p.counterexample};
  return {false, "unknown"};
}

Outcome combine(const Outcome& x, const Outcome& y) {
  return {x.passed && y.passed, x.detail + "; " + y.detail};
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

}  // namespace

int main() {
  int failures = 0;
  auto criterion = [&](int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && seconds >= limit_seconds) {
      outcome.passed = false;
      outcome.detail += "; took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s";
    }
    if (!outcome.passed) ++failures;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds;
    std::cout << (outcome.passed ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " (" << time.str()
              << " s) -- " << outcome.detail << std::endl;
  };

  CheckParams defaults;  // max-degree 5, 1000 samples, seed 0

  criterion(1, "associator (abd,abd,abd) witnesses non-power-associativity", 1.0, [] {
    const UElement abd = parse_element("abd");
    const UElement got = associator_u(abd, abd, abd);
    const UElement want = parse_element("1/6 abcd^2e - 1/6 abde^2 - 1/6 c^2d^2e + 11/36 cde^2 - 1/12 e^3");
    return Outcome{got == want, format_element(got)};
  });

  criterion(2, "alternators (ab,ab,d) and (bd,bd,a^2)", 1.0, [] {
    const UElement first = associator_u(parse_element("ab"), parse_element("ab"), parse_element("d"));
    const UElement second = associator_u(parse_element("bd"), parse_element("bd"), parse_element("a^2"));
    return Outcome{first == parse_element("-1/6 ce") && second == parse_element("1/18 e^2"),
                   format_element(first) + " and " + format_element(second)};
  });

  criterion(3, "closed form = recursive oracle = L(x) y on all 252x252 pairs of degree <= 5", 300.0, [] {
    const auto mons = monomials_up_to_degree(5);
    RecursiveOracle oracle;
    std::size_t cases = 0;
    for (const Monomial& x : mons) {
      const Operator lx = l_of_monomial(x);
      for (const Monomial& y : mons) {
        const UElement closed = mul_u_closed(x, y);
        if (closed != oracle.multiply(x, y))
          return Outcome{false, "oracle disagrees at " + to_string(x) + " * " + to_string(y)};
        if (closed != apply_operator(lx, y))
          return Outcome{false, "operator route disagrees at " + to_string(x) + " * " + to_string(y)};
        ++cases;
      }
    }
    return Outcome{cases == 252 * 252, std::to_string(cases) + " pairs"};
  });

  criterion(4, "c,d,e subalgebra: alpha-sum to degree 6, associative to degree 4", 0, [] {
    const auto wide = cde_monomials_up_to_degree(6);
    for (const Monomial& x : wide)
      for (const Monomial& y : wide)
        if (mul_u_closed(x, y) != reference::cde_product(x, y))
          return Outcome{false, "alpha-sum disagrees at " + to_string(x) + " * " + to_string(y)};
    const auto narrow = cde_monomials_up_to_degree(4);
    ProductCache cache;
    for (const Monomial& x : narrow)
      for (const Monomial& y : narrow)
        for (const Monomial& z : narrow)
          if (!cache.associator(UElement(x), UElement(y), UElement(z)).is_zero())
            return Outcome{false, "nonzero associator at (" + to_string(x) + ", " + to_string(y) + ", " +
                                      to_string(z) + ")"};
    return Outcome{true, std::to_string(wide.size() * wide.size()) + " products, " +
                             std::to_string(narrow.size() * narrow.size() * narrow.size()) + " triples"};
  });

  criterion(5, "operator representation: degree <= 6 faithfulness, commutator table, straightening", 0,
            [&] { return from_report(run_check(Suite::operators, defaults)); });

  criterion(6, "nucleus relations to degree 4 and Malcev identity on 200 seeded triples", 0, [&] {
    CheckParams malcev = defaults;
    malcev.samples = 200;
    return combine(from_report(run_check(Suite::nucleus, defaults)), from_report(run_check(Suite::malcev, malcev)));
  });

  criterion(7, "project(xy) = project(x) project(y) on all pairs of degree <= 5", 0,
            [&] { return from_report(run_check(Suite::homomorphism, defaults)); });

  criterion(8, "A(M) is alternative; type-2 associators match the closed form (exponents <= 3)", 0,
            [&] { return from_report(run_check(Suite::alternative, defaults)); });

  criterion(9, "speciality: commutators of generators reproduce the bracket table, none lies in J", 0,
            [&] { return from_report(run_check(Suite::special, defaults)); });

  criterion(10, "CLI goldens, exit codes and byte-stable output", 0, [] {
    const CliRun assoc = cli({"assoc", "abd", "abd", "abd"});
    if (assoc.code != 0 || assoc.out != "1/6 abcd^2e - 1/6 abde^2 - 1/6 c^2d^2e + 11/36 cde^2 - 1/12 e^3\n")
      return Outcome{false, "assoc abd abd abd printed '" + assoc.out + "'"};
    const CliRun quotient = cli({"assoc", "--algebra", "a", "ab", "ab", "d"});
    if (quotient.code != 0 || quotient.out != "0\n")
      return Outcome{false, "assoc --algebra a ab ab d printed '" + quotient.out + "'"};
    const CliRun special = cli({"check", "special"});
    if (special.code != 0) return Outcome{false, "check special exited with " + std::to_string(special.code)};
    const std::vector<std::string> seeded{"check", "malcev", "--seed", "0"};
    const CliRun once = cli(seeded), twice = cli(seeded);
    if (once.out != twice.out || cli({"check", "special"}).out != special.out)
      return Outcome{false, "check output differs between identical runs"};
    return Outcome{true, "3 goldens, repeated runs identical"};
  });

  return failures == 0 ? 0 : 1;
}
