#include "scrack/verification.hpp"

#include <algorithm>
#include <string>

namespace scrack {
namespace {

std::string entry_name(Value w, Position p) {
  return "(" + std::to_string(w) + ", " + std::to_string(p) + ")";
}

}  // namespace

Oracle::Oracle(std::vector<Value> values) : sorted_(std::move(values)) { std::sort(sorted_.begin(), sorted_.end()); }

std::size_t Oracle::count(QueryRange q) const { return select(q).size(); }

std::span<const Value> Oracle::select(QueryRange q) const {
  auto first = std::lower_bound(sorted_.begin(), sorted_.end(), q.low);
  auto last = std::lower_bound(first, sorted_.end(), q.high);
  return {first, last};
}

std::optional<Violation> check_index_sound(const CrackedColumn& col) {
  const auto data = col.data();
  const auto n = static_cast<Position>(data.size());
  std::vector<std::pair<Value, Position>> entries(col.index().begin(), col.index().end());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto [w, p] = entries[k];
    if (p <= 0 || p >= n) {
      return Violation{"entry " + entry_name(w, p) + " lies outside (0, " + std::to_string(n) + ")", p};
    }
    if (k > 0 && p <= entries[k - 1].second) {
      return Violation{"entry " + entry_name(w, p) + " does not follow " +
                           entry_name(entries[k - 1].first, entries[k - 1].second),
                       p};
    }
  }

  // With ordered entries, each position only has to respect the two entries
  // around its piece.
  std::size_t next = 0;
  for (Position i = 0; i < n; ++i) {
    while (next < entries.size() && entries[next].second <= i) ++next;
    const Value v = data[static_cast<std::size_t>(i)];
    const std::pair<Value, Position>* broken = nullptr;
    if (next < entries.size() && v >= entries[next].first) broken = &entries[next];
    if (next > 0 && v < entries[next - 1].first) broken = &entries[next - 1];
    if (broken) {
      return Violation{"entry " + entry_name(broken->first, broken->second) + " violated by value " +
                           std::to_string(v) + " at position " + std::to_string(i),
                       i};
    }
  }
  return std::nullopt;
}

std::optional<Violation> check_inflight(const CrackedColumn& col) {
  const auto data = col.data();
  for (const auto& [piece_lo, crack] : col.inflight()) {
    const Piece piece = col.find_piece(crack.pivot);
    if (piece.lo != piece_lo) {
      return Violation{"in-flight crack on pivot " + std::to_string(crack.pivot) + " is registered at " +
                           std::to_string(piece_lo) + " but its piece starts at " + std::to_string(piece.lo),
                       piece_lo};
    }
    if (crack.left < piece.lo || crack.right > piece.hi || crack.left > crack.right + 1) {
      return Violation{"in-flight crack cursors out of range", piece_lo};
    }
    for (Position i = piece.lo; i < crack.left; ++i) {
      if (data[static_cast<std::size_t>(i)] >= crack.pivot) {
        return Violation{"in-flight left zone holds a value >= pivot", i};
      }
    }
    for (Position i = crack.right + 1; i <= piece.hi; ++i) {
      if (data[static_cast<std::size_t>(i)] < crack.pivot) {
        return Violation{"in-flight right zone holds a value < pivot", i};
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> check_permutation(const CrackedColumn& col, const Oracle& oracle) {
  const auto data = col.data();
  const auto pristine = oracle.pristine();
  if (data.size() != pristine.size()) {
    return Violation{"column holds " + std::to_string(data.size()) + " values, expected " +
                     std::to_string(pristine.size())};
  }
  if (pristine.empty()) return std::nullopt;

  const Value lo = pristine.front();
  const Value hi = pristine.back();
  const auto range = static_cast<unsigned __int128>(static_cast<__int128>(hi) - lo) + 1;
  if (range <= 8 * static_cast<unsigned __int128>(pristine.size())) {
    std::vector<std::int64_t> balance(static_cast<std::size_t>(range), 0);
    for (Value v : pristine) ++balance[static_cast<std::size_t>(v - lo)];
    for (std::size_t i = 0; i < data.size(); ++i) {
      const Value v = data[i];
      if (v < lo || v > hi || --balance[static_cast<std::size_t>(v - lo)] < 0) {
        return Violation{"value " + std::to_string(v) + " at position " + std::to_string(i) + " is not in the load-time multiset",
                         static_cast<Position>(i)};
      }
    }
    return std::nullopt;
  }

  std::vector<Value> sorted(data.begin(), data.end());
  std::sort(sorted.begin(), sorted.end());
  auto [mine, theirs] = std::mismatch(sorted.begin(), sorted.end(), pristine.begin());
  if (mine == sorted.end()) return std::nullopt;
  return Violation{"column value multiset differs from load time near value " + std::to_string(*mine) + " (expected " +
                   std::to_string(*theirs) + ")"};
}

std::optional<Violation> check_result(const CrackedColumn& col, const ResultSet& result, const Oracle& oracle,
                                      QueryRange q) {
  const auto expected = oracle.select(q);
  if (result.count() != expected.size()) {
    return Violation{"result holds " + std::to_string(result.count()) + " values, expected " +
                     std::to_string(expected.size())};
  }
  std::vector<Value> got = result.collect(col.data());
  std::sort(got.begin(), got.end());
  auto [mine, theirs] = std::mismatch(got.begin(), got.end(), expected.begin());
  if (mine == got.end()) return std::nullopt;
  return Violation{"result contains " + std::to_string(*mine) + " where " + std::to_string(*theirs) + " was expected"};
}

}  // namespace scrack
