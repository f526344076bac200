#include "scrack/end_pieces.hpp"

#include <algorithm>
#include <optional>

namespace scrack {

ResultSet answer_by_end_pieces(CrackedColumn& col, QueryRange q, EndPieceHandler& handler) {
  ResultSet result;
  const Piece first = col.find_piece(q.low);
  const bool same_piece = first.lo == col.find_piece(q.high).lo;

  if (same_piece && handler.materializes(col, first)) {
    if (!q.empty()) result.add_buffer(handler.materialize(col, first, q));
    return result;
  }

  std::optional<std::vector<Value>> head;
  Position view_begin = 0;
  if (!same_piece && handler.materializes(col, first)) {
    if (first.lower == q.low) {
      view_begin = first.lo;
    } else {
      head = handler.materialize(col, first, q);
      view_begin = first.hi + 1;
    }
  } else {
    view_begin = handler.crack_bound(col, first, q.low);
  }

  // Re-resolved: cracking the low end may have split the piece holding high.
  const Piece last = col.find_piece(q.high);
  std::optional<std::vector<Value>> tail;
  Position view_end = 0;
  if (handler.materializes(col, last)) {
    if (last.lower != q.high) tail = handler.materialize(col, last, q);
    view_end = last.lo;
  } else {
    view_end = handler.crack_bound(col, last, q.high);
  }
  // A low-bound crack that was not registered can leave `last` starting
  // before view_begin; that prefix holds only values < low.
  view_end = std::max(view_begin, view_end);

  if (head) result.add_buffer(std::move(*head));
  result.add_view(view_begin, view_end);
  if (tail) result.add_buffer(std::move(*tail));
  return result;
}

}  // namespace scrack
