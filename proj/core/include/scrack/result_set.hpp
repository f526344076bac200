#pragma once

#include <span>
#include <variant>
#include <vector>

#include "scrack/types.hpp"

namespace scrack {

/// Half-open position range [begin, end) into the column; no data is copied.
struct View {
  Position begin = 0;
  Position end = 0;

  std::size_t size() const { return static_cast<std::size_t>(end - begin); }
  friend bool operator==(const View&, const View&) = default;
};

/// Answer of a select operator: an ordered concatenation of views into the
/// column and owned buffers of materialized values. Results are compared as
/// multisets, so segment order carries no meaning beyond presentation.
///
/// Views stay valid only until the next select reorganizes the column.
class ResultSet {
 public:
  using Segment = std::variant<View, std::vector<Value>>;

  void add_view(Position begin, Position end);
  void add_buffer(std::vector<Value> values);

  std::size_t count() const { return count_; }
  const std::vector<Segment>& segments() const { return segments_; }

  /// Copies every value of the result, resolving views against `column`.
  std::vector<Value> collect(std::span<const Value> column) const;

 private:
  std::vector<Segment> segments_;
  std::size_t count_ = 0;
};

}  // namespace scrack
