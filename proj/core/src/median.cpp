#include "scrack/median.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>
#include <vector>

namespace scrack {
namespace {

// Dijkstra's three-way partition of values[left..right] around pivot.
std::pair<std::size_t, std::size_t> partition3(std::span<Value> values, std::size_t left, std::size_t right,
                                               Value pivot, SelectStats& stats) {
  std::size_t lt = left;
  std::size_t i = left;
  std::size_t gt = right + 1;  // one past the last unclassified slot
  while (i < gt) {
    const Value v = values[i];
    ++stats.touched;
    if (v < pivot) {
      if (lt != i) {
        std::swap(values[lt], values[i]);
        ++stats.swaps;
      }
      ++lt;
      ++i;
    } else if (v > pivot) {
      --gt;
      if (gt != i) {
        std::swap(values[i], values[gt]);
        ++stats.swaps;
      }
    } else {
      ++i;
    }
  }
  return {lt, gt};
}

Value median_of_three(Value a, Value b, Value c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return b;
}

Value median_of_medians(std::span<const Value> values, SelectStats& stats) {
  std::vector<Value> medians;
  medians.reserve(values.size() / 5 + 1);
  for (std::size_t g = 0; g < values.size(); g += 5) {
    Value group[5];
    const std::size_t len = std::min<std::size_t>(5, values.size() - g);
    std::copy_n(values.begin() + static_cast<std::ptrdiff_t>(g), len, group);
    std::sort(group, group + len);
    stats.touched += len;
    medians.push_back(group[(len - 1) / 2]);
  }
  const std::size_t mid = medians.size() / 2;
  introselect(medians, mid, stats);
  return medians[mid];
}

}  // namespace

ThreeWaySplit introselect(std::span<Value> values, std::size_t k, SelectStats& stats) {
  if (k >= values.size()) throw std::out_of_range("introselect rank out of range");
  std::size_t left = 0;
  std::size_t right = values.size() - 1;
  int depth_budget = 2 * static_cast<int>(std::bit_width(values.size()));
  while (left < right) {
    Value pivot;
    if (depth_budget-- > 0) {
      pivot = median_of_three(values[left], values[left + (right - left) / 2], values[right]);
    } else {
      pivot = median_of_medians(values.subspan(left, right - left + 1), stats);
    }
    auto [lt, gt] = partition3(values, left, right, pivot, stats);
    if (k < lt) {
      right = lt - 1;
    } else if (k >= gt) {
      left = gt;
    } else {
      return {lt, gt};
    }
  }
  return {left, left + 1};
}

MedianSplit split_at_median(CrackedColumn& col, const Piece& piece) {
  if (piece.size() < 2) throw std::invalid_argument("median split needs at least two elements");
  col.drop_inflight(piece.lo);
  auto values = col.mutable_data().subspan(static_cast<std::size_t>(piece.lo), piece.size());
  const std::size_t k = values.size() / 2;
  SelectStats stats;
  const ThreeWaySplit split = introselect(values, k, stats);
  col.counters().tuples_touched += stats.touched;
  col.counters().swaps += stats.swaps;

  MedianSplit result{values[k], piece.lo + static_cast<Position>(split.less_end),
                     piece.lo + static_cast<Position>(split.greater_begin)};
  col.add_crack(result.median, result.less_end);
  return result;
}

Position median_partition(CrackedColumn& col, const Piece& piece) {
  if (piece.size() < 2) return piece.lo;
  return split_at_median(col, piece).less_end;
}

}  // namespace scrack
