#include <benchmark/benchmark.h>

#include <string>

#include "mbasis/fiber.hpp"
#include "mbasis/indispensable.hpp"
#include "mbasis/markov.hpp"
#include "mbasis/model.hpp"

namespace {

using namespace mbasis;

ConfigMatrix model(const std::string& name) {
  return build(load_model_spec(std::string(MBASIS_MODELS_DIR) + "/" + name));
}

// Fresh engine per iteration so the size cache starts cold.
void BM_FibersOfDegree(benchmark::State& state) {
  const auto a = model("m12-13-23-34.json");
  const auto n = state.range(0);
  for (auto _ : state) {
    FiberEngine e(a);
    benchmark::DoNotOptimize(e.fibers_of_degree(n));
  }
  state.counters["monomials"] = static_cast<double>(monomial_count(a.cols(), n));
}
BENCHMARK(BM_FibersOfDegree)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_IndispensableSweep(benchmark::State& state) {
  const auto a = model("m12-13-23-34.json");
  for (auto _ : state) {
    FiberEngine e(a);
    benchmark::DoNotOptimize(enumerate_indispensable_monomials(e, state.range(0)));
  }
}
BENCHMARK(BM_IndispensableSweep)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_MinimalBasis(benchmark::State& state) {
  const auto a = model("m12-13-23-34.json");
  for (auto _ : state) {
    FiberEngine e(a);
    benchmark::DoNotOptimize(minimal_markov_basis(e, 4));
  }
}
BENCHMARK(BM_MinimalBasis)->Unit(benchmark::kMillisecond);

// Repeated size queries against a warm cache versus a direct count.
void BM_FiberSize(benchmark::State& state) {
  const auto a = model("m12-13-23-34.json");
  FiberEngine e(a);
  const auto t = a.statistic(a.parse_monomial("u1111*u1221*u2122*u2212"));
  const bool cached = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cached ? e.size(t) : e.size_uncached(t));
  }
}
BENCHMARK(BM_FiberSize)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
