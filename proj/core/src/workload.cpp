#include "scrack/workload.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <string>

namespace scrack {
namespace {

constexpr std::array<std::pair<Pattern, std::string_view>, 15> kPatternNames{{
    {Pattern::kRandom, "random"},
    {Pattern::kSequential, "sequential"},
    {Pattern::kSeqReverse, "seqreverse"},
    {Pattern::kSeqRandom, "seqrandom"},
    {Pattern::kSeqZoomIn, "seqzoomin"},
    {Pattern::kSeqZoomOut, "seqzoomout"},
    {Pattern::kSkew, "skew"},
    {Pattern::kZoomIn, "zoomin"},
    {Pattern::kZoomOut, "zoomout"},
    {Pattern::kZoomInAlt, "zoominalt"},
    {Pattern::kZoomOutAlt, "zoomoutalt"},
    {Pattern::kPeriodic, "periodic"},
    {Pattern::kSkewZoomOutAlt, "skewzoomoutalt"},
    {Pattern::kMixed, "mixed"},
    {Pattern::kFile, "file"},
}};

constexpr std::array<std::string_view, 15> kNamesOnly = [] {
  std::array<std::string_view, 15> names{};
  for (std::size_t i = 0; i < kPatternNames.size(); ++i) names[i] = kPatternNames[i].second;
  return names;
}();

constexpr std::array<Pattern, 13> kSynthetic{
    Pattern::kRandom,     Pattern::kSequential, Pattern::kSeqReverse, Pattern::kSeqRandom, Pattern::kSeqZoomIn,
    Pattern::kSeqZoomOut, Pattern::kSkew,       Pattern::kZoomIn,     Pattern::kZoomOut,   Pattern::kZoomInAlt,
    Pattern::kZoomOutAlt, Pattern::kPeriodic,   Pattern::kSkewZoomOutAlt,
};

constexpr std::uint64_t kPermutationStream = 0x5E9A;
constexpr std::uint64_t kMixedStream = 0x313D;

// floor(num * span / den) without intermediate overflow.
Value scaled(std::uint64_t num, Value span, std::uint64_t den) {
  return static_cast<Value>((static_cast<__int128>(num) * span) / static_cast<__int128>(den));
}

std::size_t region_count(std::size_t count) { return (count + kQueriesPerRegion - 1) / kQueriesPerRegion; }

}  // namespace

std::string_view to_string(Pattern pattern) {
  for (const auto& [p, name] : kPatternNames) {
    if (p == pattern) return name;
  }
  return "?";
}

std::optional<Pattern> parse_pattern(std::string_view name) {
  for (const auto& [p, n] : kPatternNames) {
    if (n == name) return p;
  }
  return std::nullopt;
}

std::span<const std::string_view> pattern_names() { return kNamesOnly; }
std::span<const Pattern> synthetic_patterns() { return kSynthetic; }

void WorkloadSpec::validate() const {
  if (pattern == Pattern::kFile) throw std::invalid_argument("file workloads are loaded, not generated");
  if (domain_lo >= domain_hi) throw std::invalid_argument("workload domain is empty");
  if (width <= 0 || width > domain_hi - domain_lo) throw std::invalid_argument("query width must be in (0, domain size]");
  if (count < 1) throw std::invalid_argument("workload needs at least one query");
  if (mixed_block < 1) throw std::invalid_argument("mixed block must be >= 1");
}

QuerySequence QuerySequence::synthetic(const WorkloadSpec& spec) {
  spec.validate();
  QuerySequence seq;
  seq.spec_ = spec;
  seq.rng_ = Rng(spec.seed, Rng::kWorkload);
  seq.mix_rng_ = Rng(spec.seed, kMixedStream);
  if (spec.pattern == Pattern::kSeqRandom || spec.pattern == Pattern::kMixed) {
    seq.permutation_.resize(spec.count);
    std::iota(seq.permutation_.begin(), seq.permutation_.end(), std::size_t{0});
    Rng shuffler(spec.seed, kPermutationStream);
    shuffler.shuffle(std::span<std::size_t>(seq.permutation_));
  }
  seq.region_steps_.assign(region_count(spec.count), 0);
  return seq;
}

QuerySequence QuerySequence::from_ranges(std::vector<QueryRange> ranges) {
  QuerySequence seq;
  seq.fixed_ = std::move(ranges);
  seq.last_pattern_ = Pattern::kFile;
  return seq;
}

std::optional<QueryRange> QuerySequence::next() {
  if (fixed_) {
    if (position_ == fixed_->size()) return std::nullopt;
    return (*fixed_)[position_++];
  }
  if (position_ == spec_.count) return std::nullopt;
  const std::size_t i = ++position_;
  Pattern pattern = spec_.pattern;
  if (pattern == Pattern::kMixed) {
    if ((i - 1) % spec_.mixed_block == 0) mixed_current_ = kSynthetic[mix_rng_.uniform(kSynthetic.size())];
    pattern = mixed_current_;
  }
  last_pattern_ = pattern;
  const Value start = start_of(pattern, i);
  return QueryRange{start, start + spec_.width};
}

Value QuerySequence::clamp(Value p, Value lo, Value hi) const { return std::clamp(p, lo, hi - spec_.width); }

Value QuerySequence::in_region(Pattern zoom, std::size_t region, std::size_t step) const {
  const Value span = spec_.domain_hi - spec_.domain_lo;
  const std::size_t regions = region_steps_.size();
  const Value rlo = spec_.domain_lo + scaled(region, span, regions);
  const Value rhi = spec_.domain_lo + scaled(region + 1, span, regions);
  const Value rspan = rhi - rlo;
  const std::size_t j = (step + 1) / 2;
  const Value offset = scaled(j, rspan, kQueriesPerRegion);
  const bool odd = step % 2 == 1;

  Value p = 0;
  if (zoom == Pattern::kZoomIn) {
    p = odd ? rlo + offset : rhi - spec_.width - offset;
  } else {
    const Value mid = rlo + rspan / 2;
    p = odd ? mid - offset : mid + offset;
  }
  if (spec_.width <= rspan) return clamp(p, rlo, rhi);
  return clamp(p, spec_.domain_lo, spec_.domain_hi);
}

Value QuerySequence::start_of(Pattern pattern, std::size_t i) {
  const Value lo = spec_.domain_lo;
  const Value hi = spec_.domain_hi;
  const Value span = hi - lo;
  const Value w = spec_.width;
  const std::size_t k = spec_.count;
  const std::size_t j = (i + 1) / 2;
  const bool odd = i % 2 == 1;

  switch (pattern) {
    case Pattern::kRandom:
      return lo + static_cast<Value>(rng_.uniform(static_cast<std::uint64_t>(span - w + 1)));
    case Pattern::kSequential:
      return clamp(lo + scaled(i - 1, span, k), lo, hi);
    case Pattern::kSeqReverse:
      return clamp(hi - w - scaled(i - 1, span, k), lo, hi);
    case Pattern::kSeqRandom:
      return clamp(lo + scaled(permutation_[i - 1], span, k), lo, hi);
    case Pattern::kZoomIn:
      return clamp(odd ? lo + scaled(j, span, k) : hi - w - scaled(j, span, k), lo, hi);
    case Pattern::kZoomOut: {
      const Value mid = lo + span / 2;
      return clamp(odd ? mid - scaled(j, span, k) : mid + scaled(j, span, k), lo, hi);
    }
    case Pattern::kZoomInAlt:
    case Pattern::kZoomOutAlt: {
      const std::size_t regions = region_steps_.size();
      const Pattern zoom = pattern == Pattern::kZoomInAlt ? Pattern::kZoomIn : Pattern::kZoomOut;
      return in_region(zoom, (i - 1) % regions, (i - 1) / regions + 1);
    }
    case Pattern::kSeqZoomIn:
    case Pattern::kSeqZoomOut: {
      const Pattern zoom = pattern == Pattern::kSeqZoomIn ? Pattern::kZoomIn : Pattern::kZoomOut;
      return in_region(zoom, (i - 1) / kQueriesPerRegion, (i - 1) % kQueriesPerRegion + 1);
    }
    case Pattern::kPeriodic:
      return clamp(lo + scaled(10 * (i - 1), span, k) % span, lo, hi);
    case Pattern::kSkew: {
      const double u = rng_.uniform01();
      return clamp(lo + static_cast<Value>(std::floor(static_cast<double>(span) * std::pow(u, 4))), lo, hi);
    }
    case Pattern::kSkewZoomOutAlt: {
      const std::size_t regions = region_steps_.size();
      const double u = rng_.uniform01();
      const auto region =
          std::min(regions - 1, static_cast<std::size_t>(std::floor(static_cast<double>(regions) * std::pow(u, 4))));
      const std::size_t step = region_steps_[region]++ % kQueriesPerRegion + 1;
      return in_region(Pattern::kZoomOut, region, step);
    }
    case Pattern::kMixed:
    case Pattern::kFile:
      break;
  }
  throw std::logic_error("pattern has no generator");
}

std::vector<QueryRange> parse_query_trace(std::istream& in) {
  std::vector<QueryRange> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    Value bounds[2];
    const char* p = line.data() + first;
    const char* end = line.data() + line.size();
    for (Value& bound : bounds) {
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      auto [ptr, ec] = std::from_chars(p, end, bound);
      if (ec != std::errc{}) throw ParseError(line_no, "expected two integers `low high`");
      p = ptr;
    }
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p != end) throw ParseError(line_no, "trailing characters after `low high`");
    if (bounds[0] > bounds[1]) throw ParseError(line_no, "low > high");
    out.emplace_back(bounds[0], bounds[1]);
  }
  return out;
}

QuerySequence load_query_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open query file " + path.string());
  return QuerySequence::from_ranges(parse_query_trace(in));
}

}  // namespace scrack
