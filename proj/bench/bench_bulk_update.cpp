#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dflux/kernels.hpp"
#include "dflux/scheme.hpp"

using namespace dflux;

namespace {

struct Field {
  long half;
  long offset;
  std::vector<double> rho, out, edges;

  explicit Field(int N) : half(1L << N), offset(half + 1), rho(2 * offset + 1), out(rho.size()), edges(rho.size()) {
    std::mt19937_64 rng(N);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (long j = -half; j <= half; ++j) rho[j + offset] = u(rng);
  }
};

void BM_BulkSerial(benchmark::State& state) {
  Field f(static_cast<int>(state.range(0)));
  const auto flux = FluxModel::lwr();
  const double h = 1.0 / f.half;
  for (auto _ : state) {
    bulk_update_serial(flux, {f.rho.data(), f.out.data(), f.edges.data(), f.offset}, {-f.half, f.half, FluxSide::Plus},
                       0.45 * h, h);
    benchmark::DoNotOptimize(f.out.data());
  }
  state.SetItemsProcessed(state.iterations() * (2 * f.half + 1));
}

void BM_BulkParallel(benchmark::State& state) {
  Field f(static_cast<int>(state.range(0)));
  const auto flux = FluxModel::lwr();
  const double h = 1.0 / f.half;
  for (auto _ : state) {
    bulk_update_parallel(flux, {f.rho.data(), f.out.data(), f.edges.data(), f.offset},
                         {-f.half, f.half, FluxSide::Plus}, 0.45 * h, h);
    benchmark::DoNotOptimize(f.out.data());
  }
  state.SetItemsProcessed(state.iterations() * (2 * f.half + 1));
}

void BM_RunExampleA(benchmark::State& state) {
  const auto policy = state.range(1) ? ExecutionPolicy::Parallel : ExecutionPolicy::Serial;
  const auto cfg = example_config(ExampleId::A, static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) {
    auto s = advance_to(initialize(cfg), cfg, cfg.final_time, {}, policy);
    benchmark::DoNotOptimize(s.field.raw().data());
  }
}

}  // namespace

BENCHMARK(BM_BulkSerial)->Arg(10)->Arg(14)->Arg(18);
BENCHMARK(BM_BulkParallel)->Arg(10)->Arg(14)->Arg(18);
BENCHMARK(BM_RunExampleA)->Args({10, 0})->Args({10, 1})->Args({12, 0})->Args({12, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
