#include <doctest.h>

#include "malcev5/verify.hpp"

using namespace malcev5;

TEST_CASE("suite names round-trip") {
  for (Suite s : kAllSuites) CHECK(suite_from_name(suite_name(s)) == s);
  CHECK(!suite_from_name("all"));
}

TEST_CASE("serial and parallel product tables agree") {
  const auto mons = monomials_up_to_degree(4);
  const auto serial = product_table(mons, mons, Execution::serial);
  const auto parallel = product_table(mons, mons, Execution::parallel);
  REQUIRE(serial.size() == mons.size() * mons.size());
  CHECK(serial == parallel);
  CHECK(serial[1 * mons.size() + 0] == UElement(mons[1]));
}

TEST_CASE("every suite passes at small size, identically in both modes") {
  CheckParams params;
  params.max_degree = 3;
  params.samples = 40;
  params.seed = 3;
  for (Suite s : kAllSuites) {
    if (s == Suite::alternative) continue;  // fixed exponent bound; covered by the acceptance run
    CAPTURE(suite_name(s));
    params.execution = Execution::serial;
    const CheckReport serial = run_check(s, params);
    params.execution = Execution::parallel;
    const CheckReport parallel = run_check(s, params);
    CHECK(serial.passed());
    CHECK(!serial.properties.empty());
    CHECK(format_report(serial) == format_report(parallel));
  }
}

TEST_CASE("report text") {
  CheckReport report;
  report.suite = "demo";
  report.properties.push_back({"holds", 3, std::nullopt});
  report.properties.push_back({"breaks", 4, std::string("x = a")});
  CHECK(!report.passed());
  const std::string text = format_report(report);
  CHECK(text.find("check demo (max-degree 5, samples 1000, seed 0)") == 0);
  CHECK(text.find("  pass  holds [3 cases]\n") != std::string::npos);
  CHECK(text.find("  FAIL  breaks [4 cases]\n        counterexample: x = a\n") != std::string::npos);
  CHECK(text.find("result: FAIL") != std::string::npos);
}
