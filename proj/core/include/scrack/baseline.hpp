#pragma once

#include "scrack/column.hpp"
#include "scrack/end_pieces.hpp"

namespace scrack {

/// Full scan into a fresh buffer. The column is left untouched.
ResultSet scan_select(CrackedColumn& col, QueryRange q);

struct SortState {
  bool sorted = false;
};

/// Sorts the whole column on the first call, then answers every query with
/// two binary searches. Sort comparisons count as touched tuples; swaps
/// count the elements that left their original slot.
ResultSet sort_select(CrackedColumn& col, QueryRange q, SortState& state);

/// Original query-driven cracking: cracks the end pieces on the query bounds
/// and returns a view of the qualifying area.
ResultSet crack_select(CrackedColumn& col, QueryRange q);

/// Original cracking expressed per end piece, for strategies that mix it
/// with other reorganizations.
class OriginalCracking final : public EndPieceHandler {
 public:
  bool materializes(const CrackedColumn&, const Piece&) override { return false; }
  Position crack_bound(CrackedColumn& col, const Piece& piece, Value bound) override {
    return crack_in_two(col, piece, bound);
  }
  std::vector<Value> materialize(CrackedColumn& col, const Piece& piece, QueryRange q) override;
};

}  // namespace scrack
