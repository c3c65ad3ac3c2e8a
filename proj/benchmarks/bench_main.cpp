#include <benchmark/benchmark.h>

#include "runfall/ecdf.hpp"
#include "runfall/indicator.hpp"
#include "runfall/ingest.hpp"
#include "runfall/runtime.hpp"
#include "runfall/suite.hpp"
#include "runfall/targets.hpp"

using namespace runfall;

namespace {

// 15 random-search trials on sphere, n=5, shared by the benchmarks below.
const DataSet& sphere_data() {
  static const DataSet data = [] {
    DataSet ds;
    for (std::uint64_t i = 1; i <= 15; ++i) {
      Rng rng(derive_seed(1, std::to_string(i)));
      ds.insert(random_search(instantiate(FunctionId::sphere, 5, i), 100000, rng));
    }
    return ds;
  }();
  return data;
}

void BM_RandomSearch(benchmark::State& state) {
  const auto inst = instantiate(FunctionId::rastrigin, static_cast<std::uint32_t>(state.range(0)), 1);
  Rng rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(random_search(inst, 100000, rng));
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_RandomSearch)->Arg(2)->Arg(5)->Arg(20);

void BM_NoisyIndicator(benchmark::State& state) {
  std::vector<double> history(static_cast<std::size_t>(state.range(0)));
  Rng rng(3);
  for (double& h : history) h = rng.uniform01();
  for (auto _ : state) benchmark::DoNotOptimize(noisy_indicator(history));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NoisyIndicator)->Arg(10000)->Arg(1000000);

void BM_ParseRunLog(benchmark::State& state) {
  const std::string text = write_run_log(*sphere_data().traces().front());
  for (auto _ : state) benchmark::DoNotOptimize(parse_run_log(text));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseRunLog);

void BM_ExtractRuntimes(benchmark::State& state) {
  const TargetSet grid = default_target_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_runtimes(sphere_data(), std::string(kRandomSearchName), "sphere", 5, grid));
  }
}
BENCHMARK(BM_ExtractRuntimes);

void BM_Bootstrap(benchmark::State& state) {
  const RuntimeEntry entry{{120, 4000, 9, 77}, {100000, 100000, 100000, 100000, 100000, 100000, 100000}};
  Rng rng(5);
  const bool vr = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(bootstrap_runtimes(entry, 1000, vr, rng));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_Bootstrap)->Arg(0)->Arg(1);

void BM_AggregateEcdf(benchmark::State& state) {
  const TargetSet grid = default_target_grid();
  const RuntimeTable table = scope_table(sphere_data(), {std::string(kRandomSearchName), {5}, {}}, grid);
  EcdfOptions opt;
  opt.seed = 11;
  opt.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(aggregate_ecdf(table, {std::string(kRandomSearchName), {5}, {}}, grid, opt));
  }
}
BENCHMARK(BM_AggregateEcdf)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
