#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scrack/rng.hpp"
#include "scrack/types.hpp"

namespace scrack {

enum class Pattern {
  kRandom,
  kSequential,
  kSeqReverse,
  kSeqRandom,
  kSeqZoomIn,
  kSeqZoomOut,
  kSkew,
  kZoomIn,
  kZoomOut,
  kZoomInAlt,
  kZoomOutAlt,
  kPeriodic,
  kSkewZoomOutAlt,
  kMixed,
  kFile,
};

std::string_view to_string(Pattern pattern);
std::optional<Pattern> parse_pattern(std::string_view name);
/// Every pattern name, `file` included.
std::span<const std::string_view> pattern_names();
/// The patterns a mixed workload switches between.
std::span<const Pattern> synthetic_patterns();

/// Sub-region length, in queries, of the *alt and seqzoom* patterns.
inline constexpr std::size_t kQueriesPerRegion = 100;

struct WorkloadSpec {
  Pattern pattern = Pattern::kRandom;
  Value domain_lo = 0;
  Value domain_hi = 0;
  Value width = 10;
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  std::size_t mixed_block = 1000;

  void validate() const;
};

/// Malformed input file; `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A finite, deterministic stream of range queries.
class QuerySequence {
 public:
  static QuerySequence synthetic(const WorkloadSpec& spec);
  static QuerySequence from_ranges(std::vector<QueryRange> ranges);

  /// The next query, or nullopt once the sequence is exhausted.
  std::optional<QueryRange> next();

  /// Queries yielded so far.
  std::size_t position() const { return position_; }
  std::size_t size() const { return fixed_ ? fixed_->size() : spec_.count; }

  /// Pattern that produced the most recent query (kFile for traces).
  Pattern last_pattern() const { return last_pattern_; }

 private:
  QuerySequence() : rng_(0), mix_rng_(0) {}

  Value start_of(Pattern pattern, std::size_t i);
  Value in_region(Pattern zoom, std::size_t region, std::size_t step) const;
  Value clamp(Value p, Value lo, Value hi) const;

  WorkloadSpec spec_;
  std::optional<std::vector<QueryRange>> fixed_;
  Rng rng_;
  Rng mix_rng_;
  std::vector<std::size_t> permutation_;
  std::vector<std::size_t> region_steps_;
  Pattern mixed_current_ = Pattern::kRandom;
  Pattern last_pattern_ = Pattern::kRandom;
  std::size_t position_ = 0;
};

/// Trace format: one `low high` pair per line (half-open), `#` comments and
/// blank lines ignored. Throws ParseError naming the offending line.
std::vector<QueryRange> parse_query_trace(std::istream& in);
QuerySequence load_query_file(const std::filesystem::path& path);

}  // namespace scrack
