#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "scrack/column.hpp"
#include "scrack/end_pieces.hpp"
#include "scrack/rng.hpp"

namespace scrack {

/// Thresholds are element counts, not bytes. The defaults correspond to a
/// 32 KB L1 and a 256 KB L2 cache holding 4-byte keys.
struct StochasticConfig {
  std::size_t crack_size = 8192;
  std::size_t l2_size = 65536;
  double swap_frac = 0.1;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument when a field is out of its domain.
  void validate() const;
};

enum class StochasticKind { kDdc, kDdr, kDd1c, kDd1r, kMdd1r, kPmdd1r };

std::string_view to_string(StochasticKind kind);
std::optional<StochasticKind> parse_stochastic_kind(std::string_view name);

// Bound cracks. Each locates the piece holding `v`, adds auxiliary cracks
// while that piece is larger than crack_size, then cracks on `v` and returns
// the first position holding a value >= v.

/// Recursive median halving.
Position ddc_crack(CrackedColumn& col, Value v, std::size_t crack_size);
/// Recursive random-pivot halving.
Position ddr_crack(CrackedColumn& col, Value v, std::size_t crack_size, Rng& rng);
/// At most one median crack.
Position dd1c_crack(CrackedColumn& col, Value v, std::size_t crack_size);
/// At most one random crack.
Position dd1r_crack(CrackedColumn& col, Value v, std::size_t crack_size, Rng& rng);

struct Materialized {
  std::vector<Value> values;
  /// Position of the random crack; empty while a progressive crack is in flight.
  std::optional<Position> crack;
};

/// One two-cursor pass over `piece` around the value at a uniformly random
/// position, copying out values inside `q` as the cursors pass them.
Materialized split_and_materialize(CrackedColumn& col, const Piece& piece, QueryRange q, Rng& rng);

/// Like split_and_materialize, but spends at most ceil(swap_frac * size)
/// swaps. An interrupted pass is parked in the column's in-flight registry
/// and resumed by the next call on the same piece. The remaining piece zones
/// are scanned read-only so `q` is always fully answered.
Materialized progressive_split_and_materialize(CrackedColumn& col, const Piece& piece, QueryRange q,
                                               double swap_frac, Rng& rng);

/// End-piece behaviour of every stochastic cracking variant.
class StochasticCracking final : public EndPieceHandler {
 public:
  StochasticCracking(StochasticKind kind, const StochasticConfig& config, Rng& rng);

  StochasticKind kind() const { return kind_; }

  bool materializes(const CrackedColumn& col, const Piece& piece) override;
  Position crack_bound(CrackedColumn& col, const Piece& piece, Value bound) override;
  std::vector<Value> materialize(CrackedColumn& col, const Piece& piece, QueryRange q) override;

 private:
  StochasticKind kind_;
  StochasticConfig config_;
  Rng* rng_;
};

ResultSet ddc_select(CrackedColumn& col, QueryRange q, const StochasticConfig& config);
ResultSet ddr_select(CrackedColumn& col, QueryRange q, const StochasticConfig& config, Rng& rng);
ResultSet dd1c_select(CrackedColumn& col, QueryRange q, const StochasticConfig& config);
ResultSet dd1r_select(CrackedColumn& col, QueryRange q, const StochasticConfig& config, Rng& rng);
ResultSet mdd1r_select(CrackedColumn& col, QueryRange q, Rng& rng);
ResultSet pmdd1r_select(CrackedColumn& col, QueryRange q, const StochasticConfig& config, Rng& rng);

}  // namespace scrack
