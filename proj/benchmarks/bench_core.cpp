#include <benchmark/benchmark.h>

#include "smc/qadic.hpp"
#include "smc/verifier.hpp"

using namespace smc;

namespace {

const CurvePresentation& big() {
  static const CurvePresentation p = herzog_present({5, 103, 169});
  return p;
}

const VerifierData& data() {
  static const VerifierData d = load_verifier_data(SMC_BENCH_DATA_DIR);
  return d;
}

void BM_Gf2Elimination(benchmark::State& state) {
  QAdicSystem sys = qadic_system(big(), FieldSpec::gf(2), 59, 17407);
  for (auto _ : state) benchmark::DoNotOptimize(gf2_matrix(sys).rank());
}
BENCHMARK(BM_Gf2Elimination)->Unit(benchmark::kMillisecond);

void BM_ExactNegativeCurve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(graded_dim(big(), FieldSpec::rationals(), 7, 2065));
}
BENCHMARK(BM_ExactNegativeCurve)->Unit(benchmark::kMillisecond);

void BM_PolyMultiply(benchmark::State& state) {
  auto gens = build_named_generators(big(), PrimeField(2), data().generators, {false});
  const ModPoly& a = gens.at(static_cast<std::size_t>(state.range(0))).poly;
  const ModPoly& b = gens.at(static_cast<std::size_t>(state.range(1))).poly;
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.counters["terms"] = static_cast<double>(a.size() * b.size());
}
BENCHMARK(BM_PolyMultiply)->Args({6, 6})->Args({12, 14})->Args({16, 17})->Unit(benchmark::kMicrosecond);

void BM_GeneratorChain(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_named_generators(big(), PrimeField(2), data().generators, {false}));
  }
}
BENCHMARK(BM_GeneratorChain)->Unit(benchmark::kMillisecond);

void BM_IdealProducts(benchmark::State& state) {
  auto gens = build_named_generators(big(), PrimeField(2), data().generators, {false});
  ProductOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_ideal_I(big(), gens, data(), opts));
}
BENCHMARK(BM_IdealProducts)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
