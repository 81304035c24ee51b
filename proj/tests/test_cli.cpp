#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "malcev5/cli.hpp"
#include "malcev5/text.hpp"

using namespace malcev5;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("goldens") {
  const Run assoc = run({"assoc", "abd", "abd", "abd"});
  CHECK(assoc.code == kExitSuccess);
  CHECK(assoc.out == "1/6 abcd^2e - 1/6 abde^2 - 1/6 c^2d^2e + 11/36 cde^2 - 1/12 e^3\n");

  const Run quotient = run({"assoc", "--algebra", "a", "ab", "ab", "d"});
  CHECK(quotient.code == kExitSuccess);
  CHECK(quotient.out == "0\n");

  const Run special = run({"check", "special"});
  CHECK(special.code == kExitSuccess);
  CHECK(special.out.find("result: PASS") != std::string::npos);
}

TEST_CASE("arithmetic subcommands") {
  CHECK(run({"mul", "b", "a"}).out == "ab - c\n");
  CHECK(run({"bracket", "c", "d"}).out == "e\n");
  CHECK(run({"mul", "--algebra", "a", "c", "e"}).out == "0\n");
  CHECK(run({"project", "abde + ce + c"}).out == "abde + c\n");
  CHECK(run({"apply-op", "rho", "a", "b"}).out == "-c\n");
  CHECK(run({"apply-op", "l", "b", "a"}).out == "ab - c\n");
}

TEST_CASE("json output") {
  const Run r = run({"--format", "json", "assoc", "ab", "ab", "d"});
  REQUIRE(r.code == kExitSuccess);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["coeff"] == "-1/6");
  CHECK(doc[0]["exp"] == nlohmann::json({0, 0, 1, 0, 1}));

  const auto adoc = nlohmann::json::parse(run({"--format", "json", "project", "abd"}).out);
  CHECK(adoc[0]["type"] == 2);

  const Run check = run({"--format", "json", "check", "malcev", "--samples", "20"});
  CHECK(check.code == kExitSuccess);
  const auto report = nlohmann::json::parse(check.out);
  CHECK(report[0]["suite"] == "malcev");
  CHECK(report[0]["passed"] == true);
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"mul", "a"}).code == kExitUsage);
  CHECK(run({"--format", "xml", "mul", "a", "b"}).code == kExitUsage);
  CHECK(run({"mul", "--algebra", "z", "a", "b"}).code == kExitUsage);
  CHECK(run({"apply-op", "sigma", "a", "b"}).code == kExitUsage);
  CHECK(run({"apply-op", "rho", "q", "b"}).code == kExitUsage);
  CHECK(run({"check", "everything"}).code == kExitUsage);

  const Run bad = run({"mul", "ba", "a"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.out.empty());
  CHECK(bad.err.find(std::string(kLetterOrderMessage)) != std::string::npos);
}

TEST_CASE("help exits with 0") { CHECK(run({"--help"}).code == kExitSuccess); }

TEST_CASE("check output is byte-stable and independent of threading") {
  const std::vector<std::string> args{"check", "malcev", "--max-degree", "3", "--samples", "50", "--seed", "7"};
  const Run first = run(args);
  const Run second = run(args);
  auto serial_args = args;
  serial_args.push_back("--serial");
  const Run serial = run(serial_args);
  CHECK(first.code == kExitSuccess);
  CHECK(first.out == second.out);
  CHECK(first.out == serial.out);
  CHECK(first.out.find("seed 7") != std::string::npos);
}

TEST_CASE("memo limit variable") {
  ::setenv(kMemoLimitVariable, "100", 1);
  CHECK(run({"check", "oracle", "--max-degree", "2", "--samples", "5"}).code == kExitSuccess);
  ::setenv(kMemoLimitVariable, "lots", 1);
  CHECK(run({"check", "oracle", "--max-degree", "2"}).code == kExitUsage);
  ::unsetenv(kMemoLimitVariable);
}

TEST_CASE("property: printed results parse back to themselves") {
  for (const char* expr : {"abd", "ab + 2d", "c^2 - 1/3 e", "bd"}) {
    const Run r = run({"mul", expr, "abd"});
    REQUIRE(r.code == kExitSuccess);
    const std::string line = r.out.substr(0, r.out.size() - 1);
    CHECK(format_element(parse_element(line)) == line);
  }
}
