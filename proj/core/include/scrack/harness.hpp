#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scrack/strategy.hpp"
#include "scrack/verification.hpp"
#include "scrack/workload.hpp"

namespace scrack {

struct RunConfig {
  std::string strategy = "crack";
  StrategyParams params;
  /// Pattern, width and query count. Domain and seed are filled in from the
  /// data and `seed` when the run starts.
  WorkloadSpec workload;
  /// When set, replaces workload.width with ceil(selectivity * column size).
  std::optional<double> selectivity;
  std::optional<std::filesystem::path> workload_file;
  std::size_t n_tuples = 1'000'000;
  std::optional<std::filesystem::path> values_file;
  std::uint64_t seed = 1;
  bool timing = true;
  /// Check every answer against the oracle and the index after every query.
  bool verify = false;
};

struct QueryMetrics {
  std::uint64_t query_idx = 0;
  std::uint64_t elapsed_ns = 0;
  std::uint64_t cum_elapsed_ns = 0;
  std::uint64_t tuples_touched = 0;
  std::uint64_t cum_tuples_touched = 0;
  std::uint64_t swaps = 0;
  std::uint64_t cracks_added = 0;
  std::uint64_t piece_count = 0;
  std::uint64_t result_count = 0;
};

/// A verified run produced a wrong answer or broke a column invariant.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(std::uint64_t query_idx, const std::string& strategy, const std::string& what)
      : std::runtime_error("query " + std::to_string(query_idx) + " (" + strategy + "): " + what),
        query_idx_(query_idx) {}
  std::uint64_t query_idx() const { return query_idx_; }

 private:
  std::uint64_t query_idx_;
};

/// The values 0..n-1 in an order fixed by `seed`.
std::vector<Value> shuffled_values(std::size_t n, std::uint64_t seed);

/// One decimal integer per line; blank lines are skipped.
std::vector<Value> parse_values(std::istream& in);
std::vector<Value> load_values_file(const std::filesystem::path& path);

/// Column, strategy and workload of one run, advanced one query at a time.
class Benchmark {
 public:
  /// Throws std::invalid_argument for bad names or parameters, ParseError
  /// for malformed input files.
  explicit Benchmark(const RunConfig& cfg);

  /// Answers the next query, or returns nullopt once the workload is done.
  /// Throws VerificationError when verification is on and a check fails.
  std::optional<QueryMetrics> step();

  const CrackedColumn& column() const { return column_; }
  Strategy& strategy() { return *strategy_; }
  const QuerySequence& workload() const { return workload_; }
  /// The most recent query, if any.
  std::optional<QueryRange> last_query() const { return last_query_; }

 private:
  void verify(QueryRange q, const ResultSet& result);

  RunConfig cfg_;
  CrackedColumn column_;
  std::unique_ptr<Strategy> strategy_;
  QuerySequence workload_;
  std::optional<Oracle> oracle_;
  std::optional<QueryRange> last_query_;
  QueryMetrics totals_;
};

/// Runs the whole workload, handing each row to `sink`.
void run_benchmark(const RunConfig& cfg, const std::function<void(const QueryMetrics&)>& sink);
std::vector<QueryMetrics> run_benchmark(const RunConfig& cfg);

inline constexpr const char* kCsvHeader =
    "query_idx,elapsed_ns,cum_elapsed_ns,tuples_touched,cum_tuples_touched,swaps,cracks_added,piece_count,"
    "result_count";

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const QueryMetrics& m);
void write_csv(std::ostream& out, const std::vector<QueryMetrics>& rows);

}  // namespace scrack
