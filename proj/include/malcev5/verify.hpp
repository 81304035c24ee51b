#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "malcev5/element.hpp"
#include "malcev5/envelope.hpp"

namespace malcev5 {

/// How a sweep distributes its independent cases. Both modes return
/// identical results; the serial path is the reference implementation.
enum class Execution { serial, parallel };

/// Named verification suites.
enum class Suite { oracle, operators, nucleus, malcev, alternative, homomorphism, special };

inline constexpr Suite kAllSuites[] = {Suite::oracle,      Suite::operators,    Suite::nucleus,
                                       Suite::malcev,      Suite::alternative,  Suite::homomorphism,
                                       Suite::special};

std::string_view suite_name(Suite suite);
std::optional<Suite> suite_from_name(std::string_view name);

struct CheckParams {
  /// Pairs of monomials up to this degree are compared exhaustively; suites
  /// that need more room use max_degree + 1 or max_degree - 1 (see README).
  unsigned max_degree = 5;
  /// Number of random cases for each randomized property.
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  Execution execution = Execution::parallel;
  OracleLimits limits{};
};

/// Outcome of one property inside a suite.
struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  /// Set when the property failed: the first counterexample in case order.
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample; }
};

struct CheckReport {
  std::string suite;
  CheckParams params;
  std::vector<PropertyResult> properties;
  double seconds = 0.0;

  bool passed() const;
};

/// Runs one suite. Never throws for a failed property; the failure is
/// recorded in the report instead.
CheckReport run_check(Suite suite, const CheckParams& params);

/// Human-readable report. Contains no timing, so it is byte-stable for
/// fixed parameters.
std::string format_report(const CheckReport& report);

/// mul_u_closed over every (left, right) pair, row-major. This is the
/// data-parallel kernel the sweeps are built on.
std::vector<UElement> product_table(std::span<const Monomial> left, std::span<const Monomial> right,
                                    Execution execution);

}  // namespace malcev5
