#include <benchmark/benchmark.h>

#include "cli/commands.hpp"
#include "qchaos/amplifier.hpp"
#include "qchaos/dimacs.hpp"
#include "qchaos/qsim.hpp"

namespace {

qchaos::ClauseSet random_3cnf(std::uint32_t n) {
  // Near the 3-SAT threshold so root counts are small but often nonzero.
  return qchaos::cli::generate_random_kcnf(
      {.n = n, .m = static_cast<std::size_t>(4.2 * n), .k = 3, .seed = n});
}

void BM_CountRoots(benchmark::State& state) {
  const auto cs = random_3cnf(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qchaos::count_roots(cs));
  state.SetComplexityN(std::int64_t{1} << state.range(0));
}
BENCHMARK(BM_CountRoots)->DenseRange(8, 22, 2)->Complexity(benchmark::oN);

void BM_StateVectorPipeline(benchmark::State& state) {
  const auto cs = random_3cnf(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qchaos::qsim::run_statevector_pipeline(cs));
  state.SetComplexityN(std::int64_t{1} << state.range(0));
}
BENCHMARK(BM_StateVectorPipeline)->DenseRange(8, 20, 2)->Complexity(benchmark::oN);

void BM_IterateMap(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto params = qchaos::amplifier::LogisticParams::for_variables(n);
  const double x0 = std::ldexp(1.0, -static_cast<int>(n));
  for (auto _ : state) benchmark::DoNotOptimize(qchaos::amplifier::iterate_map(x0, params));
}
BENCHMARK(BM_IterateMap)->Arg(10)->Arg(60)->Arg(500);

void BM_VerifyPropositions(benchmark::State& state) {
  std::vector<std::uint32_t> ns;
  for (std::uint32_t n = 1; n <= 60; ++n) ns.push_back(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qchaos::amplifier::verify_propositions(ns, 1, 3.71));
  }
}
BENCHMARK(BM_VerifyPropositions);

void BM_ParseDimacs(benchmark::State& state) {
  const auto text = qchaos::dimacs::serialize(random_3cnf(static_cast<std::uint32_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(qchaos::dimacs::parse(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseDimacs)->Arg(100)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
