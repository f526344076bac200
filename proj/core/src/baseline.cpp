#include "scrack/baseline.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace scrack {

ResultSet scan_select(CrackedColumn& col, QueryRange q) {
  std::vector<Value> out;
  for (Value v : col.data()) {
    if (q.low <= v && v < q.high) out.push_back(v);
  }
  col.counters().tuples_touched += col.size();
  ResultSet result;
  result.add_buffer(std::move(out));
  return result;
}

ResultSet sort_select(CrackedColumn& col, QueryRange q, SortState& state) {
  auto data = col.mutable_data();
  if (!state.sorted) {
    const std::vector<Value> before(data.begin(), data.end());
    std::uint64_t comparisons = 0;
    std::sort(data.begin(), data.end(), [&comparisons](Value a, Value b) {
      ++comparisons;
      return a < b;
    });
    std::uint64_t moved = 0;
    for (std::size_t i = 0; i < data.size(); ++i) moved += before[i] != data[i];
    col.counters().tuples_touched += comparisons;
    col.counters().swaps += moved;
    state.sorted = true;
  }
  const auto begin = std::lower_bound(data.begin(), data.end(), q.low) - data.begin();
  const auto end = std::lower_bound(data.begin(), data.end(), q.high) - data.begin();
  return make_view(col, begin, end);
}

ResultSet crack_select(CrackedColumn& col, QueryRange q) {
  const Piece first = col.find_piece(q.low);
  const Piece last = col.find_piece(q.high);
  if (first.lo == last.lo) {
    auto [begin, end] = crack_in_three(col, first, q.low, q.high);
    return make_view(col, begin, end);
  }
  const Position begin = crack_in_two(col, first, q.low);
  const Position end = crack_in_two(col, last, q.high);
  return make_view(col, begin, end);
}

std::vector<Value> OriginalCracking::materialize(CrackedColumn&, const Piece&, QueryRange) {
  throw std::logic_error("original cracking never materializes end pieces");
}

}  // namespace scrack
