#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace scrack {

using Value = std::int64_t;
// Signed so that a cursor may sit one slot before a piece starting at 0.
using Position = std::int64_t;

/// Half-open value interval [low, high) requested by a select operator.
struct QueryRange {
  Value low = 0;
  Value high = 0;

  constexpr QueryRange() = default;
  constexpr QueryRange(Value lo, Value hi) : low(lo), high(hi) {
    if (lo > hi) throw std::invalid_argument("query range low > high");
  }

  constexpr bool contains(Value v) const { return low <= v && v < high; }
  constexpr bool empty() const { return low == high; }
  friend constexpr bool operator==(const QueryRange&, const QueryRange&) = default;
};

/// A maximal run of positions between two adjacent cracks.
///
/// `lo` and `hi` are inclusive positions. Every value stored in the piece
/// satisfies `lower <= v < upper`; a missing bound means the piece touches
/// the corresponding end of the column and is unbounded on that side.
struct Piece {
  Position lo = 0;
  Position hi = -1;
  std::optional<Value> lower;
  std::optional<Value> upper;

  constexpr std::size_t size() const { return static_cast<std::size_t>(hi - lo + 1); }

  constexpr bool contains_value(Value v) const {
    return (!lower || *lower <= v) && (!upper || v < *upper);
  }

  friend constexpr bool operator==(const Piece&, const Piece&) = default;
};

}  // namespace scrack
