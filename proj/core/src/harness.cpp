#include "scrack/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>

namespace scrack {
namespace {

std::vector<Value> load_data(const RunConfig& cfg) {
  if (cfg.values_file) return load_values_file(*cfg.values_file);
  if (cfg.n_tuples < 1) throw std::invalid_argument("n must be >= 1");
  return shuffled_values(cfg.n_tuples, cfg.seed);
}

QuerySequence make_workload(const RunConfig& cfg, std::span<const Value> data) {
  if (cfg.workload_file) return load_query_file(*cfg.workload_file);
  WorkloadSpec spec = cfg.workload;
  const auto [min, max] = std::minmax_element(data.begin(), data.end());
  spec.domain_lo = *min;
  spec.domain_hi = *max + 1;
  spec.seed = cfg.seed;
  if (cfg.selectivity) {
    if (!(*cfg.selectivity > 0.0 && *cfg.selectivity <= 1.0)) throw std::invalid_argument("selectivity must be in (0, 1]");
    spec.width = std::max<Value>(1, static_cast<Value>(std::ceil(*cfg.selectivity * static_cast<double>(data.size()))));
  }
  return QuerySequence::synthetic(spec);
}

StrategyParams seeded(StrategyParams params, std::uint64_t seed) {
  params.stochastic.seed = seed;
  return params;
}

}  // namespace

std::vector<Value> shuffled_values(std::size_t n, std::uint64_t seed) {
  std::vector<Value> values(n);
  std::iota(values.begin(), values.end(), Value{0});
  Rng(seed, Rng::kData).shuffle(std::span<Value>(values));
  return values;
}

std::vector<Value> parse_values(std::istream& in) {
  std::vector<Value> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    Value v = 0;
    const char* begin = line.data() + first;
    const char* end = line.data() + last + 1;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end) throw ParseError(line_no, "expected one integer");
    values.push_back(v);
  }
  return values;
}

std::vector<Value> load_values_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open values file " + path.string());
  auto values = parse_values(in);
  if (values.empty()) throw std::invalid_argument("values file holds no values");
  return values;
}

Benchmark::Benchmark(const RunConfig& cfg)
    : cfg_(cfg),
      column_(load_data(cfg)),
      strategy_(make_strategy(cfg.strategy, seeded(cfg.params, cfg.seed))),
      workload_(make_workload(cfg, column_.data())) {
  if (cfg_.verify) oracle_.emplace(std::vector<Value>(column_.data().begin(), column_.data().end()));
}

std::optional<QueryMetrics> Benchmark::step() {
  const auto q = workload_.next();
  if (!q) return std::nullopt;
  last_query_ = q;

  const auto start = std::chrono::steady_clock::now();
  ResultSet result = strategy_->select(column_, *q);
  const auto stop = std::chrono::steady_clock::now();

  if (cfg_.verify) verify(*q, result);

  const auto& c = column_.counters();
  QueryMetrics m;
  m.query_idx = strategy_->query_number();
  m.elapsed_ns =
      cfg_.timing ? static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count())
                  : 0;
  m.cum_elapsed_ns = totals_.cum_elapsed_ns + m.elapsed_ns;
  m.tuples_touched = c.tuples_touched;
  m.cum_tuples_touched = totals_.cum_tuples_touched + c.tuples_touched;
  m.swaps = c.swaps;
  m.cracks_added = c.cracks_added;
  m.piece_count = strategy_->piece_count(column_);
  m.result_count = result.count();
  totals_ = m;
  return m;
}

void Benchmark::verify(QueryRange q, const ResultSet& result) {
  const std::uint64_t idx = strategy_->query_number();
  const std::string name(strategy_->name());
  if (auto v = check_result(column_, result, *oracle_, q)) {
    throw VerificationError(idx, name,
                            "wrong answer for [" + std::to_string(q.low) + ", " + std::to_string(q.high) + "): " +
                                v->message);
  }
  if (auto v = check_index_sound(column_)) throw VerificationError(idx, name, "unsound index: " + v->message);
  if (auto v = check_inflight(column_)) throw VerificationError(idx, name, "bad in-flight crack: " + v->message);
  if (auto v = check_permutation(column_, *oracle_)) throw VerificationError(idx, name, v->message);
}

void run_benchmark(const RunConfig& cfg, const std::function<void(const QueryMetrics&)>& sink) {
  Benchmark bench(cfg);
  while (auto m = bench.step()) sink(*m);
}

std::vector<QueryMetrics> run_benchmark(const RunConfig& cfg) {
  std::vector<QueryMetrics> rows;
  run_benchmark(cfg, [&rows](const QueryMetrics& m) { rows.push_back(m); });
  return rows;
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const QueryMetrics& m) {
  const std::uint64_t fields[] = {m.query_idx,    m.elapsed_ns,   m.cum_elapsed_ns, m.tuples_touched, m.cum_tuples_touched,
                                  m.swaps,        m.cracks_added, m.piece_count,    m.result_count};
  char buf[32];
  bool first = true;
  for (std::uint64_t f : fields) {
    if (!first) out.put(',');
    first = false;
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, f);
    out.write(buf, end - buf);
  }
  out.put('\n');
}

void write_csv(std::ostream& out, const std::vector<QueryMetrics>& rows) {
  write_csv_header(out);
  for (const auto& m : rows) write_csv_row(out, m);
}

}  // namespace scrack
