#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scrack/column.hpp"

namespace scrack {

/// Ground truth for range queries: a sorted copy of the load-time values.
class Oracle {
 public:
  explicit Oracle(std::vector<Value> values);

  std::size_t count(QueryRange q) const;
  /// The qualifying values in ascending order.
  std::span<const Value> select(QueryRange q) const;
  std::span<const Value> pristine() const { return sorted_; }

 private:
  std::vector<Value> sorted_;
};

/// First problem found by a check. `position` is -1 when the problem is not
/// tied to a single slot of the column.
struct Violation {
  std::string message;
  Position position = -1;
};

/// Full scan of every cracker index entry against the data, plus ordering
/// of the entries themselves.
std::optional<Violation> check_index_sound(const CrackedColumn& col);

/// Every in-flight progressive crack keeps its three zones consistent.
std::optional<Violation> check_inflight(const CrackedColumn& col);

/// Column data is a permutation of the oracle's values.
std::optional<Violation> check_permutation(const CrackedColumn& col, const Oracle& oracle);

/// Result multiset equals the oracle's answer for `q`.
std::optional<Violation> check_result(const CrackedColumn& col, const ResultSet& result, const Oracle& oracle,
                                      QueryRange q);

}  // namespace scrack
