#include "scrack/stochastic.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "scrack/median.hpp"
#include "scrack/partition.hpp"

namespace scrack {

void StochasticConfig::validate() const {
  if (crack_size < 1) throw std::invalid_argument("crack_size must be >= 1");
  if (l2_size < crack_size) throw std::invalid_argument("l2_size must be >= crack_size");
  if (!(swap_frac > 0.0 && swap_frac <= 1.0)) throw std::invalid_argument("swap_frac must be in (0, 1]");
}

namespace {

constexpr std::array<std::pair<StochasticKind, std::string_view>, 6> kKindNames{{
    {StochasticKind::kDdc, "ddc"},
    {StochasticKind::kDdr, "ddr"},
    {StochasticKind::kDd1c, "dd1c"},
    {StochasticKind::kDd1r, "dd1r"},
    {StochasticKind::kMdd1r, "mdd1r"},
    {StochasticKind::kPmdd1r, "pmdd1r"},
}};

enum class Auxiliary { kMedian, kRandom };

// Adds one auxiliary crack to `piece` and returns the part that holds `v`.
// Returns nullopt when the piece holds a single distinct value and cannot be
// split at all.
std::optional<Piece> split_towards(CrackedColumn& col, const Piece& piece, Value v, Auxiliary how, Rng* rng) {
  constexpr Value kMax = std::numeric_limits<Value>::max();
  Value w = 0;
  Position p = 0;
  if (how == Auxiliary::kMedian) {
    const MedianSplit split = split_at_median(col, piece);
    w = split.median;
    p = split.less_end;
    if (p == piece.lo) {
      // The median is the piece minimum: split above its run of duplicates.
      if (split.greater_begin > piece.hi || w == kMax) return std::nullopt;
      w = split.median + 1;
      p = split.greater_begin;
      col.add_crack(w, p);
    }
  } else {
    w = col.data()[static_cast<std::size_t>(piece.lo) + rng->uniform(piece.size())];
    p = crack_in_two(col, piece, w);
    if (p == piece.lo) {
      // Drew the piece minimum; everything moved right. Retry just above it.
      if (w == kMax) return std::nullopt;
      ++w;
      p = crack_in_two(col, piece, w);
      if (p > piece.hi) return std::nullopt;
    }
  }
  if (v < w) return Piece{piece.lo, p - 1, piece.lower, w};
  return Piece{p, piece.hi, w, piece.upper};
}

Position crack_with_auxiliaries(CrackedColumn& col, Piece piece, Value v, std::size_t crack_size, Auxiliary how,
                                bool at_most_once, Rng* rng) {
  while (piece.size() > crack_size) {
    auto next = split_towards(col, piece, v, how, rng);
    if (!next) break;
    piece = *next;
    if (at_most_once) break;
  }
  return crack_in_two(col, piece, v);
}

}  // namespace

std::string_view to_string(StochasticKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<StochasticKind> parse_stochastic_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

Position ddc_crack(CrackedColumn& col, Value v, std::size_t crack_size) {
  return crack_with_auxiliaries(col, col.find_piece(v), v, crack_size, Auxiliary::kMedian, false, nullptr);
}

Position ddr_crack(CrackedColumn& col, Value v, std::size_t crack_size, Rng& rng) {
  return crack_with_auxiliaries(col, col.find_piece(v), v, crack_size, Auxiliary::kRandom, false, &rng);
}

Position dd1c_crack(CrackedColumn& col, Value v, std::size_t crack_size) {
  return crack_with_auxiliaries(col, col.find_piece(v), v, crack_size, Auxiliary::kMedian, true, nullptr);
}

Position dd1r_crack(CrackedColumn& col, Value v, std::size_t crack_size, Rng& rng) {
  return crack_with_auxiliaries(col, col.find_piece(v), v, crack_size, Auxiliary::kRandom, true, &rng);
}

Materialized split_and_materialize(CrackedColumn& col, const Piece& piece, QueryRange q, Rng& rng) {
  col.drop_inflight(piece.lo);
  auto data = col.mutable_data();
  const Value pivot = data[static_cast<std::size_t>(piece.lo) + rng.uniform(piece.size())];

  Materialized out;
  Position left = piece.lo;
  Position right = piece.hi;
  auto pass = detail::two_cursor_pass(data, left, right, pivot, detail::kUnlimitedSwaps, [&](Value v) {
    if (q.low <= v && v < q.high) out.values.push_back(v);
  });
  col.counters().tuples_touched += pass.touched;
  col.counters().swaps += pass.swaps;
  col.add_crack(pivot, left);
  out.crack = left;
  return out;
}

Materialized progressive_split_and_materialize(CrackedColumn& col, const Piece& piece, QueryRange q,
                                               double swap_frac, Rng& rng) {
  auto data = col.mutable_data();
  InFlightCrack state;
  if (const InFlightCrack* parked = col.find_inflight(piece.lo)) {
    state = *parked;
  } else {
    state.pivot = data[static_cast<std::size_t>(piece.lo) + rng.uniform(piece.size())];
    state.left = piece.lo;
    state.right = piece.hi;
  }
  const Position done_left = state.left;
  const Position done_right = state.right;
  const auto budget = static_cast<std::size_t>(std::ceil(swap_frac * static_cast<double>(piece.size())));

  Materialized out;
  auto keep = [&](Value v) {
    if (q.low <= v && v < q.high) out.values.push_back(v);
  };
  auto scan = [&](Position from, Position to) {  // inclusive, read-only
    for (Position i = from; i <= to; ++i) keep(data[static_cast<std::size_t>(i)]);
    if (to >= from) col.counters().tuples_touched += static_cast<std::uint64_t>(to - from + 1);
  };

  auto pass = detail::two_cursor_pass(data, state.left, state.right, state.pivot, budget, keep);
  col.counters().tuples_touched += pass.touched;
  col.counters().swaps += pass.swaps;
  state.swaps_done += pass.swaps;

  // Zones finished by earlier queries: the left one only holds values below
  // the pivot, the right one only values at or above it.
  if (q.low < state.pivot) scan(piece.lo, done_left - 1);
  if (q.high > state.pivot) scan(done_right + 1, piece.hi);

  if (pass.complete) {
    col.drop_inflight(piece.lo);
    col.add_crack(state.pivot, state.left);
    out.crack = state.left;
  } else {
    scan(state.left, state.right);
    col.set_inflight(piece.lo, state);
  }
  return out;
}

StochasticCracking::StochasticCracking(StochasticKind kind, const StochasticConfig& config, Rng& rng)
    : kind_(kind), config_(config), rng_(&rng) {
  config_.validate();
}

bool StochasticCracking::materializes(const CrackedColumn&, const Piece&) {
  return kind_ == StochasticKind::kMdd1r || kind_ == StochasticKind::kPmdd1r;
}

Position StochasticCracking::crack_bound(CrackedColumn& col, const Piece& piece, Value bound) {
  const std::size_t limit = config_.crack_size;
  switch (kind_) {
    case StochasticKind::kDdc:
      return crack_with_auxiliaries(col, piece, bound, limit, Auxiliary::kMedian, false, nullptr);
    case StochasticKind::kDdr:
      return crack_with_auxiliaries(col, piece, bound, limit, Auxiliary::kRandom, false, rng_);
    case StochasticKind::kDd1c:
      return crack_with_auxiliaries(col, piece, bound, limit, Auxiliary::kMedian, true, nullptr);
    case StochasticKind::kDd1r:
      return crack_with_auxiliaries(col, piece, bound, limit, Auxiliary::kRandom, true, rng_);
    case StochasticKind::kMdd1r:
    case StochasticKind::kPmdd1r:
      break;
  }
  throw std::logic_error("materializing strategies do not crack on query bounds");
}

std::vector<Value> StochasticCracking::materialize(CrackedColumn& col, const Piece& piece, QueryRange q) {
  if (kind_ == StochasticKind::kPmdd1r && piece.size() > config_.l2_size) {
    return progressive_split_and_materialize(col, piece, q, config_.swap_frac, *rng_).values;
  }
  if (kind_ == StochasticKind::kMdd1r || kind_ == StochasticKind::kPmdd1r) {
    return split_and_materialize(col, piece, q, *rng_).values;
  }
  throw std::logic_error("view-based strategies do not materialize end pieces");
}

ResultSet ddc_select(CrackedColumn& col, QueryRange q, const StochasticConfig& config) {
  Rng unused(config.seed);
  StochasticCracking handler(StochasticKind::kDdc, config, unused);
  return answer_by_end_pieces(col, q, handler);
}

ResultSet ddr_select(CrackedColumn& col, QueryRange q, const StochasticConfig& config, Rng& rng) {
  StochasticCracking handler(StochasticKind::kDdr, config, rng);
  return answer_by_end_pieces(col, q, handler);
}

ResultSet dd1c_select(CrackedColumn& col, QueryRange q, const StochasticConfig& config) {
  Rng unused(config.seed);
  StochasticCracking handler(StochasticKind::kDd1c, config, unused);
  return answer_by_end_pieces(col, q, handler);
}

ResultSet dd1r_select(CrackedColumn& col, QueryRange q, const StochasticConfig& config, Rng& rng) {
  StochasticCracking handler(StochasticKind::kDd1r, config, rng);
  return answer_by_end_pieces(col, q, handler);
}

ResultSet mdd1r_select(CrackedColumn& col, QueryRange q, Rng& rng) {
  StochasticCracking handler(StochasticKind::kMdd1r, StochasticConfig{}, rng);
  return answer_by_end_pieces(col, q, handler);
}

ResultSet pmdd1r_select(CrackedColumn& col, QueryRange q, const StochasticConfig& config, Rng& rng) {
  StochasticCracking handler(StochasticKind::kPmdd1r, config, rng);
  return answer_by_end_pieces(col, q, handler);
}

}  // namespace scrack
