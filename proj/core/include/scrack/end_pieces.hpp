#pragma once

#include <vector>

#include "scrack/column.hpp"

namespace scrack {

/// Per-piece behaviour of a cracking select.
///
/// A range select only ever reorganizes the (at most two) end pieces that
/// contain its bounds; pieces strictly between them already qualify. Each
/// end piece is either cracked on the bound it contains, or reorganized by
/// some other means while its qualifying values are copied out.
class EndPieceHandler {
 public:
  virtual ~EndPieceHandler() = default;

  virtual bool materializes(const CrackedColumn& col, const Piece& piece) = 0;

  /// Reorganizes `piece` (which contains `bound`) and returns the first
  /// position holding a value >= bound.
  virtual Position crack_bound(CrackedColumn& col, const Piece& piece, Value bound) = 0;

  /// Reorganizes `piece` and returns its values that fall inside `q`.
  virtual std::vector<Value> materialize(CrackedColumn& col, const Piece& piece, QueryRange q) = 0;
};

/// Answers `q` as concat(head buffer, view over fully covered pieces, tail
/// buffer), delegating each end piece to `handler`.
///
/// A materializing end piece is skipped when the query bound coincides with
/// its lower value bound: the low-end piece then qualifies entirely and the
/// high-end piece holds no qualifying value.
ResultSet answer_by_end_pieces(CrackedColumn& col, QueryRange q, EndPieceHandler& handler);

}  // namespace scrack
