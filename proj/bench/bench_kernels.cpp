// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "malcev5/verify.hpp"

using namespace malcev5;

namespace {

void product_table_bench(benchmark::State& state, Execution execution) {
  const auto mons = monomials_up_to_degree(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(product_table(mons, mons, execution));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * mons.size() * mons.size()));
}

void check_bench(benchmark::State& state, Suite suite, Execution execution) {
  CheckParams params;
  params.max_degree = static_cast<unsigned>(state.range(0));
  params.samples = 200;
  params.execution = execution;
  for (auto _ : state) {
    const CheckReport report = run_check(suite, params);
    if (!report.passed()) state.SkipWithError("suite failed");
  }
}

}  // namespace

BENCHMARK_CAPTURE(product_table_bench, serial, Execution::serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(product_table_bench, parallel, Execution::parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(check_bench, oracle_serial, Suite::oracle, Execution::serial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(check_bench, oracle_parallel, Suite::oracle, Execution::parallel)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(check_bench, homomorphism_serial, Suite::homomorphism, Execution::serial)
    ->Arg(5)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(check_bench, homomorphism_parallel, Suite::homomorphism, Execution::parallel)
    ->Arg(5)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
