#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "scrack/result_set.hpp"
#include "scrack/types.hpp"

namespace scrack {

/// Logical work done by the current select call.
struct InstrumentationCounters {
  std::uint64_t tuples_touched = 0;
  std::uint64_t swaps = 0;
  std::uint64_t cracks_added = 0;
};

/// A partition pass that was interrupted by its swap budget.
///
/// Inside the owning piece, [piece.lo, left) holds values < pivot,
/// (right, piece.hi] holds values >= pivot and [left, right] is untouched.
struct InFlightCrack {
  Value pivot = 0;
  Position left = 0;
  Position right = -1;
  std::uint64_t swaps_done = 0;
};

/// A dense value array plus the cracker index that records which value
/// ranges live in which contiguous pieces.
///
/// Index entry (w, p) states that every position < p holds a value < w and
/// every position >= p holds a value >= w. Entries are strictly increasing in
/// both value and position and always lie strictly inside (0, size()), so
/// every piece is non-empty.
class CrackedColumn {
 public:
  using CrackerIndex = std::map<Value, Position>;

  explicit CrackedColumn(std::vector<Value> values);

  std::size_t size() const { return data_.size(); }
  std::span<const Value> data() const { return data_; }
  std::span<Value> mutable_data() { return data_; }

  const CrackerIndex& index() const { return index_; }
  std::size_t piece_count() const { return index_.size() + 1; }

  /// The unique piece whose value bounds contain `v`.
  Piece find_piece(Value v) const;

  /// Registers crack (w, p). Returns false without changing the index when
  /// the crack is already known or would create an empty piece. Throws
  /// std::logic_error if the entry contradicts the data or the index order.
  bool add_crack(Value w, Position p);

  InstrumentationCounters& counters() { return counters_; }
  const InstrumentationCounters& counters() const { return counters_; }
  void reset_counters() { counters_ = {}; }

  /// In-flight progressive cracks, keyed by the first position of their piece.
  const std::map<Position, InFlightCrack>& inflight() const { return inflight_; }
  const InFlightCrack* find_inflight(Position piece_lo) const;
  void set_inflight(Position piece_lo, const InFlightCrack& crack) { inflight_[piece_lo] = crack; }
  /// Any reorganization of a piece invalidates its in-flight crack.
  void drop_inflight(Position piece_lo) { inflight_.erase(piece_lo); }

  /// Direct index access for fault-injection tests; bypasses all checks.
  CrackerIndex& unchecked_index() { return index_; }

 private:
  std::vector<Value> data_;
  CrackerIndex index_;
  std::map<Position, InFlightCrack> inflight_;
  InstrumentationCounters counters_;
};

/// Partitions `piece` so that values < pivot precede values >= pivot and
/// registers the crack. Returns the first position holding a value >= pivot.
Position crack_in_two(CrackedColumn& col, const Piece& piece, Value pivot);

/// Splits `piece` into [< a | a <= v < b | >= b] via two successive
/// crack_in_two calls. Returns both crack positions.
std::pair<Position, Position> crack_in_three(CrackedColumn& col, const Piece& piece, Value a, Value b);

ResultSet make_view(const CrackedColumn& col, Position begin, Position end);

}  // namespace scrack
