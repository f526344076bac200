#include <benchmark/benchmark.h>

#include <string>

#include "scrack/harness.hpp"
#include "scrack/median.hpp"

namespace {

using namespace scrack;

void BM_CrackInTwo(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto values = shuffled_values(n, 1);
  for (auto _ : state) {
    state.PauseTiming();
    CrackedColumn col(values);
    state.ResumeTiming();
    benchmark::DoNotOptimize(crack_in_two(col, col.find_piece(0), static_cast<Value>(n / 2)));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_CrackInTwo)->Range(1 << 12, 1 << 20);

void BM_MedianPartition(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto values = shuffled_values(n, 2);
  for (auto _ : state) {
    state.PauseTiming();
    CrackedColumn col(values);
    state.ResumeTiming();
    benchmark::DoNotOptimize(median_partition(col, col.find_piece(0)));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_MedianPartition)->Range(1 << 12, 1 << 20);

// One full run: 10^6 tuples, 1000 queries of width 10.
void BM_Strategy(benchmark::State& state, const std::string& strategy, Pattern pattern) {
  RunConfig cfg;
  cfg.strategy = strategy;
  cfg.n_tuples = 1'000'000;
  cfg.workload.pattern = pattern;
  cfg.workload.count = 1000;
  cfg.timing = false;
  for (auto _ : state) {
    std::uint64_t touched = 0;
    run_benchmark(cfg, [&touched](const QueryMetrics& m) { touched = m.cum_tuples_touched; });
    state.counters["tuples_touched"] = static_cast<double>(touched);
  }
}

void register_strategies() {
  for (auto name : strategy_names()) {
    if (name == "scan") continue;
    for (Pattern pattern : {Pattern::kRandom, Pattern::kSequential}) {
      const std::string label = "BM_Strategy/" + std::string(name) + "/" + std::string(to_string(pattern));
      benchmark::RegisterBenchmark(label.c_str(), BM_Strategy, std::string(name), pattern)
          ->Unit(benchmark::kMillisecond)
          ->Iterations(1);
    }
  }
}

const int kRegistered = (register_strategies(), 0);

}  // namespace

BENCHMARK_MAIN();
