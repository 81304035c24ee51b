#include "malcev5/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <stdexcept>

#include "malcev5/alternative.hpp"
#include "malcev5/envelope.hpp"
#include "malcev5/operator.hpp"
#include "malcev5/text.hpp"
#include "malcev5/verify.hpp"

namespace malcev5 {

namespace {

enum class Algebra { u, a };
enum class Format { text, json };

struct Options {
  Format format = Format::text;
  Algebra algebra = Algebra::u;
  std::vector<std::string> exprs;
  std::string op_kind;
  std::string letter;
  std::string suite;
  CheckParams check;
  bool serial = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void print(std::ostream& out, Format format, const UElement& x) {
  out << (format == Format::json ? format_json(x) : format_element(x)) << '\n';
}

void print(std::ostream& out, Format format, const AElement& x) {
  out << (format == Format::json ? format_json(x) : format_element(x)) << '\n';
}

Letter parse_letter(const std::string& text) {
  if (text.size() == 1)
    if (auto v = letter_from_char(text[0])) return *v;
  throw UsageError("LETTER must be one of a, b, c, d, e (got '" + text + "')");
}

OracleLimits limits_from_environment() {
  OracleLimits limits;
  if (const char* raw = std::getenv(kMemoLimitVariable); raw && *raw) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (*end != '\0' || raw[0] == '-') throw UsageError(std::string(kMemoLimitVariable) + " must be a non-negative integer");
    limits.max_memo_entries = static_cast<std::size_t>(value);
  }
  return limits;
}

std::vector<UElement> parse_all(const std::vector<std::string>& exprs) {
  std::vector<UElement> out;
  out.reserve(exprs.size());
  for (const auto& text : exprs) out.push_back(parse_element(text));
  return out;
}

int run_algebra_op(const std::string& name, const Options& opts, std::ostream& out) {
  const auto xs = parse_all(opts.exprs);
  if (opts.algebra == Algebra::u) {
    UElement result;
    if (name == "mul") result = mul_u(xs[0], xs[1]);
    else if (name == "bracket") result = bracket_u(xs[0], xs[1]);
    else result = associator_u(xs[0], xs[1], xs[2]);
    print(out, opts.format, result);
  } else {
    std::vector<AElement> ys;
    for (const auto& x : xs) ys.push_back(project(x));
    AElement result;
    if (name == "mul") result = mul_a(ys[0], ys[1]);
    else if (name == "bracket") result = commutator_a(ys[0], ys[1]);
    else result = associator_a(ys[0], ys[1], ys[2]);
    print(out, opts.format, result);
  }
  return kExitSuccess;
}

nlohmann::json report_json(const CheckReport& report) {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& p : report.properties) {
    nlohmann::json entry = {{"name", p.name}, {"cases", p.cases}, {"passed", p.passed()}};
    if (p.counterexample) entry["counterexample"] = *p.counterexample;
    props.push_back(std::move(entry));
  }
  return {{"suite", report.suite},
          {"max_degree", report.params.max_degree},
          {"samples", report.params.samples},
          {"seed", report.params.seed},
          {"passed", report.passed()},
          {"properties", std::move(props)}};
}

int run_checks(const Options& opts, std::ostream& out, std::ostream& err) {
  std::vector<Suite> suites;
  if (opts.suite == "all") {
    suites.assign(std::begin(kAllSuites), std::end(kAllSuites));
  } else if (auto s = suite_from_name(opts.suite)) {
    suites.push_back(*s);
  } else {
    throw UsageError("unknown suite '" + opts.suite + "'");
  }

  CheckParams params = opts.check;
  params.execution = opts.serial ? Execution::serial : Execution::parallel;
  params.limits = limits_from_environment();

  bool all_passed = true;
  nlohmann::json reports = nlohmann::json::array();
  for (Suite suite : suites) {
    const CheckReport report = run_check(suite, params);
    all_passed = all_passed && report.passed();
    err << "check " << report.suite << ": " << std::fixed << std::setprecision(2) << report.seconds << " s\n";
    if (opts.format == Format::json) reports.push_back(report_json(report));
    else out << format_report(report);
  }
  if (opts.format == Format::json) out << reports.dump(2) << '\n';
  return all_passed ? kExitSuccess : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic in the enveloping algebra U(M) of the 5-dimensional nilpotent Malcev algebra M "
               "and in its alternative quotient A(M)."};
  app.name("malcev5");
  app.require_subcommand(1);

  Options opts;
  std::string format = "text";
  std::string algebra = "u";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto algebra_op = [&](const std::string& name, const std::string& help, std::size_t arity) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--algebra", algebra, "u for U(M), a for A(M)")
        ->check(CLI::IsMember({"u", "a"}))
        ->capture_default_str();
    cmd->add_option("expr", opts.exprs, "Element expressions")->required()->expected(static_cast<int>(arity));
    return cmd;
  };
  auto* mul = algebra_op("mul", "Product xy", 2);
  auto* bracket = algebra_op("bracket", "Commutator [x,y] = xy - yx", 2);
  auto* assoc = algebra_op("assoc", "Associator (x,y,z) = (xy)z - x(yz)", 3);

  auto* project_cmd = app.add_subcommand("project", "Image of an element of U(M) in A(M)");
  project_cmd->add_option("expr", opts.exprs, "Element expression")->required()->expected(1);

  auto* apply_cmd = app.add_subcommand("apply-op", "Apply rho(v) (bracket with v) or L(v) (left product by v)");
  apply_cmd->add_option("kind", opts.op_kind, "rho or l")->required()->check(CLI::IsMember({"rho", "l"}));
  apply_cmd->add_option("letter", opts.letter, "Generator a..e")->required();
  apply_cmd->add_option("expr", opts.exprs, "Element expression")->required()->expected(1);

  auto* check_cmd = app.add_subcommand("check", "Run a verification suite");
  check_cmd->add_option("suite", opts.suite, "oracle, operators, nucleus, malcev, alternative, homomorphism, special or all")
      ->required();
  check_cmd->add_option("--max-degree", opts.check.max_degree, "Degree bound of exhaustive sweeps")->capture_default_str();
  check_cmd->add_option("--samples", opts.check.samples, "Random cases per randomized property")->capture_default_str();
  check_cmd->add_option("--seed", opts.check.seed, "Seed of the random cases")->capture_default_str();
  check_cmd->add_flag("--serial", opts.serial, "Run sweeps on one thread (reference path)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }
  opts.format = format == "json" ? Format::json : Format::text;
  opts.algebra = algebra == "a" ? Algebra::a : Algebra::u;

  try {
    if (mul->parsed()) return run_algebra_op("mul", opts, out);
    if (bracket->parsed()) return run_algebra_op("bracket", opts, out);
    if (assoc->parsed()) return run_algebra_op("assoc", opts, out);
    if (project_cmd->parsed()) {
      print(out, opts.format, project(parse_element(opts.exprs[0])));
      return kExitSuccess;
    }
    if (apply_cmd->parsed()) {
      const Letter v = parse_letter(opts.letter);
      const Operator op = opts.op_kind == "rho" ? rho(v) : lmul(v);
      print(out, opts.format, apply_operator(op, parse_element(opts.exprs[0])));
      return kExitSuccess;
    }
    if (check_cmd->parsed()) return run_checks(opts, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ComputationError& e) {
    err << "computation error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace malcev5
