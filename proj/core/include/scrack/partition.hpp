#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <utility>

#include "scrack/types.hpp"

namespace scrack::detail {

inline constexpr std::size_t kUnlimitedSwaps = std::numeric_limits<std::size_t>::max();

struct PassResult {
  std::size_t touched = 0;
  std::size_t swaps = 0;
  bool complete = false;
};

/// Two-cursor partition of data[left..right] (inclusive) around `pivot`:
/// values < pivot end up left of the final `left`, values >= pivot right of
/// the final `right`.
///
/// `visit` sees each element exactly once, at the moment a cursor moves past
/// it. When the swap budget runs out the pass stops with left <= right and
/// [left, right] still unprocessed; calling again with the same cursors
/// resumes it.
template <typename Visit>
PassResult two_cursor_pass(std::span<Value> data, Position& left, Position& right, Value pivot,
                           std::size_t swap_budget, Visit&& visit) {
  PassResult result;
  Position l = left;
  Position r = right;
  while (l <= r) {
    while (l <= r && data[l] < pivot) visit(data[l++]);
    while (l <= r && data[r] >= pivot) visit(data[r--]);
    if (l < r) {
      if (result.swaps == swap_budget) break;
      std::swap(data[l], data[r]);
      ++result.swaps;
    }
  }
  result.touched = static_cast<std::size_t>((l - left) + (right - r));
  result.complete = l > r;
  left = l;
  right = r;
  return result;
}

inline PassResult two_cursor_pass(std::span<Value> data, Position& left, Position& right, Value pivot) {
  return two_cursor_pass(data, left, right, pivot, kUnlimitedSwaps, [](Value) {});
}

}  // namespace scrack::detail
