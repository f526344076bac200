// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Tolerances are fixed constants below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "scrack/harness.hpp"

namespace {

using namespace scrack;

constexpr std::uint64_t kSeed = 1;
constexpr std::size_t kSmallN = 10'000;
constexpr std::size_t kLargeN = 1'000'000;
constexpr std::size_t kQueries = 1000;
constexpr Value kWidth = 10;

// Pinned tolerances.
constexpr double kSequentialCrackCumFloor = 0.4;   // AC3: cum >= 0.4 * N * queries
constexpr double kSequentialRatioCeiling = 0.10;   // AC4: dd1r <= 10% of crack
constexpr double kSequentialSeconds = 30.0;        // AC4 runtime
constexpr double kRandomRatioCeiling = 1.5;        // AC5: dd1r <= 1.5x crack
constexpr std::size_t kConvergenceQueries = 50;    // AC6
constexpr std::size_t kCrackSize = 8192;           // AC7
constexpr double kMonotoneSlack = 0.10;            // AC10, AC11
constexpr std::size_t kCrossoverMin = 10;          // AC12
constexpr std::size_t kCrossoverMax = 1000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

RunConfig base_config(const std::string& strategy, Pattern pattern, std::size_t n) {
  RunConfig cfg;
  cfg.strategy = strategy;
  cfg.n_tuples = n;
  cfg.seed = kSeed;
  cfg.timing = false;
  cfg.workload.pattern = pattern;
  cfg.workload.count = kQueries;
  cfg.workload.width = kWidth;
  return cfg;
}

std::vector<QueryMetrics> run(const RunConfig& cfg) { return run_benchmark(cfg); }

std::uint64_t cumulative(const RunConfig& cfg) { return run(cfg).back().cum_tuples_touched; }

std::string csv(const RunConfig& cfg) {
  std::ostringstream out;
  write_csv(out, run(cfg));
  return out.str();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

// A query trace for the `file` workload: random queries over [0, n).
std::filesystem::path write_trace(std::size_t n) {
  auto path = std::filesystem::temp_directory_path() / "scrack_acceptance_trace.txt";
  std::ofstream out(path);
  WorkloadSpec spec;
  spec.pattern = Pattern::kRandom;
  spec.domain_lo = 0;
  spec.domain_hi = static_cast<Value>(n);
  spec.width = kWidth;
  spec.count = kQueries;
  spec.seed = kSeed;
  auto seq = QuerySequence::synthetic(spec);
  out << "# random trace\n";
  while (auto q = seq.next()) out << q->low << ' ' << q->high << '\n';
  return path;
}

std::vector<StrategyParams> sweep_params() {
  StrategyParams defaults;
  StrategyParams small;
  small.stochastic.crack_size = 64;
  small.stochastic.l2_size = 512;
  small.selective.size_threshold = 256;
  return {defaults, small};
}

// AC1 and AC2 share one sweep over strategies x workloads x parameter sets.
// Strategies are driven directly so every ResultSet can be inspected.
struct SweepResult {
  std::size_t runs = 0;
  std::size_t queries = 0;
  std::size_t wrong_answers = 0;
  std::size_t index_violations = 0;
  std::size_t permutation_violations = 0;
  std::string first_failure;
  double seconds = 0;
};

SweepResult oracle_sweep() {
  SweepResult out;
  const auto start = std::chrono::steady_clock::now();
  const auto trace = write_trace(kSmallN);
  const Oracle oracle(shuffled_values(kSmallN, kSeed));
  auto note = [&out](const std::string& what) {
    if (out.first_failure.empty()) out.first_failure = what;
  };

  for (const auto& params : sweep_params()) {
    for (auto name : strategy_names()) {
      for (auto pattern_name : pattern_names()) {
        const Pattern pattern = *parse_pattern(pattern_name);
        StrategyParams seeded = params;
        seeded.stochastic.seed = kSeed;
        auto strategy = make_strategy(name, seeded);
        CrackedColumn col(shuffled_values(kSmallN, kSeed));
        QuerySequence seq = [&] {
          if (pattern == Pattern::kFile) return load_query_file(trace);
          WorkloadSpec spec;
          spec.pattern = pattern;
          spec.domain_lo = 0;
          spec.domain_hi = static_cast<Value>(kSmallN);
          spec.width = kWidth;
          spec.count = kQueries;
          spec.seed = kSeed;
          return QuerySequence::synthetic(spec);
        }();
        ++out.runs;
        const std::string label = std::string(name) + "/" + std::string(pattern_name);
        while (auto q = seq.next()) {
          ++out.queries;
          const ResultSet r = strategy->select(col, *q);
          const std::string where = label + " query " + std::to_string(seq.position());
          if (auto v = check_result(col, r, oracle, *q)) {
            ++out.wrong_answers;
            note(where + ": " + v->message);
          }
          if (auto v = check_index_sound(col)) {
            ++out.index_violations;
            note(where + ": " + v->message);
          } else if (auto w = check_inflight(col)) {
            ++out.index_violations;
            note(where + ": " + w->message);
          }
          if (auto v = check_permutation(col, oracle)) {
            ++out.permutation_violations;
            note(where + ": " + v->message);
          }
        }
      }
    }
  }
  std::filesystem::remove(trace);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Outcome ac3_sequential_pathology() {
  const auto rows = run(base_config("crack", Pattern::kSequential, kLargeN));
  const double n = static_cast<double>(kLargeN);
  std::size_t below = 0;
  std::size_t first_below = 0;
  for (const auto& m : rows) {
    const double floor = n - static_cast<double>(m.query_idx) * (n / kQueries) - kWidth;
    if (static_cast<double>(m.tuples_touched) < floor && below++ == 0) first_below = m.query_idx;
  }
  const double cum = static_cast<double>(rows.back().cum_tuples_touched);
  const double cum_floor = kSequentialCrackCumFloor * n * kQueries;
  return {below == 0 && cum >= cum_floor,
          fmt("crack per-query floor violated %zu times (first at query %zu); cumulative %.4g >= %.4g", below,
              first_below, cum, cum_floor)};
}

Outcome ac4_sequential_ratio() {
  const auto start = std::chrono::steady_clock::now();
  const double crack = static_cast<double>(cumulative(base_config("crack", Pattern::kSequential, kLargeN)));
  const double dd1r = static_cast<double>(cumulative(base_config("dd1r", Pattern::kSequential, kLargeN)));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double ratio = dd1r / crack;
  return {ratio <= kSequentialRatioCeiling && seconds < kSequentialSeconds,
          fmt("dd1r/crack cumulative tuples touched = %.4f (<= %.2f), both runs %.1fs (< %.0fs)", ratio,
              kSequentialRatioCeiling, seconds, kSequentialSeconds)};
}

Outcome ac5_random_parity() {
  const double crack = static_cast<double>(cumulative(base_config("crack", Pattern::kRandom, kLargeN)));
  const double dd1r = static_cast<double>(cumulative(base_config("dd1r", Pattern::kRandom, kLargeN)));
  const double ratio = dd1r / crack;
  return {ratio <= kRandomRatioCeiling,
          fmt("dd1r/crack cumulative tuples touched = %.4f (<= %.2f)", ratio, kRandomRatioCeiling)};
}

std::size_t first_cheap_query(const std::string& strategy) {
  for (const auto& m : run(base_config(strategy, Pattern::kRandom, kLargeN))) {
    if (m.tuples_touched < kLargeN / 100) return m.query_idx;
  }
  return kQueries + 1;
}

Outcome ac6_convergence() {
  const std::size_t crack = first_cheap_query("crack");
  const std::size_t dd1r = first_cheap_query("dd1r");
  return {crack <= kConvergenceQueries && dd1r <= kConvergenceQueries,
          fmt("first query touching < N/100: crack %zu, dd1r %zu (<= %zu)", crack, dd1r, kConvergenceQueries)};
}

Outcome ac7_ddc_piece_bound() {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::size_t largest = 0;
  for (Pattern pattern : {Pattern::kRandom, Pattern::kSequential, Pattern::kSkew}) {
    RunConfig cfg = base_config("ddc", pattern, kLargeN);
    cfg.params.stochastic.crack_size = kCrackSize;
    Benchmark bench(cfg);
    while (bench.step()) {
      const QueryRange q = *bench.last_query();
      for (Value bound : {q.low, q.high}) {
        const std::size_t size = bench.column().find_piece(bound).size();
        largest = std::max(largest, size);
        ++checked;
        if (size > kCrackSize) ++violations;
      }
    }
  }
  return {violations == 0,
          fmt("%zu bound pieces checked, largest %zu, %zu above %zu", checked, largest, violations, kCrackSize)};
}

Outcome ac8_progressive_full_budget() {
  std::size_t compared = 0;
  std::size_t mismatches = 0;
  for (Pattern pattern : {Pattern::kRandom, Pattern::kSequential, Pattern::kSkew, Pattern::kMixed}) {
    RunConfig plain = base_config("mdd1r", pattern, kLargeN);
    RunConfig progressive = base_config("pmdd1r", pattern, kLargeN);
    progressive.params.stochastic.swap_frac = 1.0;
    plain.workload.mixed_block = progressive.workload.mixed_block = 100;

    Benchmark a(plain);
    Benchmark b(progressive);
    std::ostringstream csv_a;
    std::ostringstream csv_b;
    write_csv_header(csv_a);
    write_csv_header(csv_b);
    while (auto m = a.step()) write_csv_row(csv_a, *m);
    while (auto m = b.step()) write_csv_row(csv_b, *m);
    ++compared;
    const bool same_index = a.column().index() == b.column().index();
    const bool same_data = std::equal(a.column().data().begin(), a.column().data().end(), b.column().data().begin());
    if (csv_a.str() != csv_b.str() || !same_index || !same_data) ++mismatches;
  }
  return {mismatches == 0, fmt("%zu workloads compared (CSV, crack positions, data), %zu differ", compared, mismatches)};
}

Outcome ac9_progressive_budget() {
  // First query on a fresh column: a single end piece of N values.
  std::vector<std::uint64_t> first_swaps;
  for (double frac : {1.0, 0.1, 0.01}) {
    RunConfig cfg = base_config("pmdd1r", Pattern::kRandom, kLargeN);
    cfg.params.stochastic.swap_frac = frac;
    Benchmark bench(cfg);
    first_swaps.push_back(bench.step()->swaps);
  }
  const auto budget = static_cast<std::uint64_t>(std::ceil(0.01 * kLargeN));
  bool ok = first_swaps[2] <= budget && first_swaps[0] >= first_swaps[1] && first_swaps[1] >= first_swaps[2];

  // Later queries: each end piece above the L2 threshold spends at most its
  // own budget; smaller end pieces get a full pass of at most size/2 swaps.
  StochasticConfig config;
  config.seed = kSeed;
  config.swap_frac = 0.01;
  StochasticStrategy strategy(StochasticKind::kPmdd1r, config);
  CrackedColumn col(shuffled_values(kLargeN, kSeed));
  WorkloadSpec spec;
  spec.domain_hi = static_cast<Value>(kLargeN);
  spec.width = kWidth;
  spec.count = kQueries;
  spec.seed = kSeed;
  auto seq = QuerySequence::synthetic(spec);
  std::size_t over = 0;
  while (auto q = seq.next()) {
    const Piece first = col.find_piece(q->low);
    const Piece last = col.find_piece(q->high);
    auto allowance = [&](const Piece& p) -> std::uint64_t {
      if (p.size() <= config.l2_size) return p.size() / 2;
      return static_cast<std::uint64_t>(std::ceil(config.swap_frac * static_cast<double>(p.size())));
    };
    const std::uint64_t limit = allowance(first) + (first.lo == last.lo ? 0 : allowance(last));
    strategy.select(col, *q);
    if (col.counters().swaps > limit) ++over;
  }
  ok = ok && over == 0;
  return {ok, fmt("first-query swaps for swap_frac 1.0/0.1/0.01 = %llu/%llu/%llu, budget at 0.01 is %llu; "
                  "%zu of %zu queries over their per-piece budget",
                  static_cast<unsigned long long>(first_swaps[0]), static_cast<unsigned long long>(first_swaps[1]),
                  static_cast<unsigned long long>(first_swaps[2]), static_cast<unsigned long long>(budget), over,
                  kQueries)};
}

Outcome monotone_sweep(const std::string& strategy, Pattern pattern, const std::vector<std::uint64_t>& xs,
                       const std::function<void(RunConfig&, std::uint64_t)>& set) {
  std::vector<double> cum;
  std::string detail;
  bool ok = true;
  for (std::uint64_t x : xs) {
    RunConfig cfg = base_config(strategy, pattern, kLargeN);
    set(cfg, x);
    cum.push_back(static_cast<double>(cumulative(cfg)));
    detail += fmt("%sX=%llu:%.4g", detail.empty() ? "" : " ", static_cast<unsigned long long>(x), cum.back());
    if (cum.size() > 1 && cum.back() < (1.0 - kMonotoneSlack) * cum[cum.size() - 2]) ok = false;
  }
  return {ok, "cumulative tuples touched " + detail + fmt(" (non-decreasing within %.0f%%)", kMonotoneSlack * 100)};
}

Outcome ac12_sort_crossover() {
  const auto sort = run(base_config("sort", Pattern::kSequential, kLargeN));
  const auto crack = run(base_config("crack", Pattern::kSequential, kLargeN));
  std::size_t crossover = 0;
  for (std::size_t i = 0; i < sort.size(); ++i) {
    if (sort[i].cum_tuples_touched < crack[i].cum_tuples_touched) {
      crossover = sort[i].query_idx;
      break;
    }
  }
  return {crossover >= kCrossoverMin && crossover <= kCrossoverMax,
          fmt("sort drops below crack at query %zu (in [%zu, %zu])", crossover, kCrossoverMin, kCrossoverMax)};
}

Outcome ac13_determinism() {
  std::size_t compared = 0;
  std::size_t differ = 0;
  for (auto name : strategy_names()) {
    for (Pattern pattern : {Pattern::kRandom, Pattern::kSkew, Pattern::kMixed}) {
      RunConfig cfg = base_config(std::string(name), pattern, 100'000);
      cfg.workload.mixed_block = 50;
      ++compared;
      if (csv(cfg) != csv(cfg)) ++differ;
    }
  }
  return {differ == 0, fmt("%zu repeated runs, %zu CSVs differ", compared, differ)};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&failures](const char* id, const char* title, const std::function<Outcome()>& check) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = check();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s %s  %s: %s [%.1fs]\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), s);
    std::fflush(stdout);
  };

  const SweepResult sweep = oracle_sweep();
  report("AC1", "oracle equivalence", [&] {
    return Outcome{sweep.wrong_answers == 0 && sweep.seconds < 60.0,
                   fmt("%zu runs, %zu queries, %zu wrong answers, sweep %.1fs (< 60s)%s%s", sweep.runs, sweep.queries,
                       sweep.wrong_answers, sweep.seconds, sweep.first_failure.empty() ? "" : "; first: ",
                       sweep.first_failure.c_str())};
  });
  report("AC2", "index soundness and conservation", [&] {
    return Outcome{sweep.index_violations == 0 && sweep.permutation_violations == 0,
                   fmt("%zu queries, %zu index violations, %zu permutation violations", sweep.queries,
                       sweep.index_violations, sweep.permutation_violations)};
  });
  report("AC3", "sequential pathology of original cracking", ac3_sequential_pathology);
  report("AC4", "stochastic robustness on sequential", ac4_sequential_ratio);
  report("AC5", "random-workload parity", ac5_random_parity);
  report("AC6", "convergence on random", ac6_convergence);
  report("AC7", "DDC piece bound", ac7_ddc_piece_bound);
  report("AC8", "progressive with full budget equals MDD1R", ac8_progressive_full_budget);
  report("AC9", "progressive swap budget", ac9_progressive_budget);
  report("AC10", "periodic monotonicity", [] {
    return monotone_sweep("periodic", Pattern::kSequential, {1, 2, 4, 8, 16},
                          [](RunConfig& c, std::uint64_t x) { c.params.selective.period = x; });
  });
  report("AC11", "ScrackMon monotonicity", [] {
    return monotone_sweep("scrackmon", Pattern::kSeqRandom, {1, 5, 10, 50},
                          [](RunConfig& c, std::uint64_t x) { c.params.selective.monitor_threshold = x; });
  });
  report("AC12", "sort crossover", ac12_sort_crossover);
  report("AC13", "determinism", ac13_determinism);

  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
