#include <benchmark/benchmark.h>

#include "dquad/cases.hpp"
#include "dquad/curves.hpp"
#include "dquad/linform.hpp"
#include "dquad/pell.hpp"
#include "dquad/pipeline.hpp"
#include "dquad/reduction.hpp"
#include "dquad/sequences.hpp"
#include "dquad/tuple_core.hpp"

using namespace dquad;

namespace {

void BM_PellFundamental(benchmark::State& state) {
  const BigInt d = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(pell_fundamental(d));
}
BENCHMARK(BM_PellFundamental)->Arg(61)->Arg(991)->Arg(1'000'099);

void BM_BruteForce(benchmark::State& state) {
  BruteForceOptions opt;
  opt.short_circuit_mod4 = false;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_quadruples(8, state.range(0), state.range(0), opt));
}
BENCHMARK(BM_BruteForce)->Arg(5000)->Arg(100'000)->Unit(benchmark::kMicrosecond);

void BM_SquareScan(benchmark::State& state) {
  const Polynomial p = build_curve_case(static_cast<unsigned>(state.range(0))).target_factor();
  for (auto _ : state) benchmark::DoNotOptimize(square_scan(p, 0, 100'000));
  state.SetItemsProcessed(state.iterations() * 100'001);
}
BENCHMARK(BM_SquareScan)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_LinformBound(benchmark::State& state) {
  const ProblemInstance pi(state.range(0));
  const LinearFormInstance lf = linear_form_instance(pi, triple_context(pi, 7).c);
  for (auto _ : state) benchmark::DoNotOptimize(n_bound_from_linform(lf));
}
BENCHMARK(BM_LinformBound)->Arg(7)->Arg(661)->Unit(benchmark::kMicrosecond);

void BM_BakerDavenportPass(benchmark::State& state) {
  const ProblemInstance pi(state.range(0));
  const BigInt c = triple_context(pi, 7).c;
  const ReductionInput input = reduction_input(pi, c, BigInt("47300000000000000"), 80);
  for (auto _ : state) benchmark::DoNotOptimize(bd_reduce(input));
}
BENCHMARK(BM_BakerDavenportPass)->Arg(7)->Arg(661)->Unit(benchmark::kMicrosecond);

void BM_ReduceToExhaustion(benchmark::State& state) {
  const ProblemInstance pi(state.range(0));
  const BigInt c = triple_context(pi, 7).c;
  for (auto _ : state) benchmark::DoNotOptimize(reduce_case_to_exhaustion(pi, c));
}
BENCHMARK(BM_ReduceToExhaustion)->Arg(7)->Arg(661)->Unit(benchmark::kMillisecond);

void BM_C6PointScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(c6_point_scan(state.range(0)));
}
BENCHMARK(BM_C6PointScan)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_Pipeline(benchmark::State& state) {
  PipelineConfig cfg;
  cfg.k_to = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(cfg));
}
BENCHMARK(BM_Pipeline)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
