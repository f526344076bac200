#include "scrack/column.hpp"

#include <iterator>
#include <stdexcept>
#include <string>

#include "scrack/partition.hpp"

namespace scrack {

CrackedColumn::CrackedColumn(std::vector<Value> values) : data_(std::move(values)) {
  if (data_.empty()) throw std::invalid_argument("empty column");
}

Piece CrackedColumn::find_piece(Value v) const {
  Piece piece;
  auto next = index_.upper_bound(v);
  if (next == index_.end()) {
    piece.hi = static_cast<Position>(data_.size()) - 1;
  } else {
    piece.hi = next->second - 1;
    piece.upper = next->first;
  }
  if (next != index_.begin()) {
    auto prev = std::prev(next);
    piece.lo = prev->second;
    piece.lower = prev->first;
  }
  return piece;
}

bool CrackedColumn::add_crack(Value w, Position p) {
  const auto n = static_cast<Position>(data_.size());
  if (p < 0 || p > n) throw std::logic_error("crack position out of bounds: " + std::to_string(p));
  if (p > 0 && data_[p - 1] >= w) {
    throw std::logic_error("crack (" + std::to_string(w) + ", " + std::to_string(p) +
                           ") violates soundness: left neighbour is not smaller");
  }
  if (p < n && data_[p] < w) {
    throw std::logic_error("crack (" + std::to_string(w) + ", " + std::to_string(p) +
                           ") violates soundness: right neighbour is smaller");
  }

  auto next = index_.lower_bound(w);
  if (next != index_.end() && next->first == w) {
    if (next->second != p) throw std::logic_error("crack value " + std::to_string(w) + " already at another position");
    return false;
  }
  if (next != index_.end() && next->second < p) throw std::logic_error("crack out of order with successor");
  if (next != index_.begin() && std::prev(next)->second > p) throw std::logic_error("crack out of order with predecessor");

  // Zero-width pieces are never materialized in the index.
  if (p == 0 || p == n) return false;
  if (next != index_.end() && next->second == p) return false;
  if (next != index_.begin() && std::prev(next)->second == p) return false;

  drop_inflight(find_piece(w).lo);
  index_.emplace_hint(next, w, p);
  ++counters_.cracks_added;
  return true;
}

const InFlightCrack* CrackedColumn::find_inflight(Position piece_lo) const {
  auto it = inflight_.find(piece_lo);
  return it == inflight_.end() ? nullptr : &it->second;
}

Position crack_in_two(CrackedColumn& col, const Piece& piece, Value pivot) {
  if ((piece.lower && pivot < *piece.lower) || (piece.upper && pivot > *piece.upper)) {
    throw std::out_of_range("pivot out of piece range");
  }
  // Bounds that coincide with the piece edges are already cracked.
  if (piece.lower && pivot == *piece.lower) return piece.lo;
  if (piece.upper && pivot == *piece.upper) return piece.hi + 1;

  col.drop_inflight(piece.lo);
  Position left = piece.lo;
  Position right = piece.hi;
  auto pass = detail::two_cursor_pass(col.mutable_data(), left, right, pivot);
  col.counters().tuples_touched += pass.touched;
  col.counters().swaps += pass.swaps;
  col.add_crack(pivot, left);
  return left;
}

std::pair<Position, Position> crack_in_three(CrackedColumn& col, const Piece& piece, Value a, Value b) {
  if (a > b) throw std::invalid_argument("crack_in_three requires a <= b");
  if (piece.upper && b > *piece.upper) throw std::out_of_range("pivot out of piece range");

  const Position first = crack_in_two(col, piece, a);
  Piece upper_part{first, piece.hi, a, piece.upper};
  if (first > piece.hi) return {first, first};
  const Position second = crack_in_two(col, upper_part, b);
  return {first, second};
}

ResultSet make_view(const CrackedColumn& col, Position begin, Position end) {
  if (begin < 0 || begin > end || end > static_cast<Position>(col.size())) {
    throw std::out_of_range("view [" + std::to_string(begin) + ", " + std::to_string(end) + ") out of bounds");
  }
  ResultSet result;
  result.add_view(begin, end);
  return result;
}

}  // namespace scrack
