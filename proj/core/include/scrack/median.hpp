#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "scrack/column.hpp"

namespace scrack {

struct SelectStats {
  std::uint64_t touched = 0;
  std::uint64_t swaps = 0;
};

/// Three-way split around the k-th smallest element:
/// [0, less_end) < kth, [less_end, greater_begin) == kth, [greater_begin, n) > kth.
struct ThreeWaySplit {
  std::size_t less_end = 0;
  std::size_t greater_begin = 0;
};

/// Introselect: quickselect with median-of-three pivots that falls back to
/// median-of-medians pivots once the partition depth exceeds 2*log2(n),
/// giving linear worst-case time. Requires k < values.size().
ThreeWaySplit introselect(std::span<Value> values, std::size_t k, SelectStats& stats);

struct MedianSplit {
  Value median = 0;
  Position less_end = 0;       // first position holding a value >= median
  Position greater_begin = 0;  // first position holding a value > median
};

/// Partitions a piece of >= 2 elements around its median (the element of
/// rank size/2) and registers crack (median, less_end).
MedianSplit split_at_median(CrackedColumn& col, const Piece& piece);

/// Median crack of `piece`. For distinct values the returned position is
/// piece.lo + size/2; single-element pieces are left alone and piece.lo is
/// returned.
Position median_partition(CrackedColumn& col, const Piece& piece);

}  // namespace scrack
