#include "scrack/result_set.hpp"

#include <stdexcept>

namespace scrack {

void ResultSet::add_view(Position begin, Position end) {
  if (begin > end) throw std::invalid_argument("view begin > end");
  segments_.emplace_back(View{begin, end});
  count_ += static_cast<std::size_t>(end - begin);
}

void ResultSet::add_buffer(std::vector<Value> values) {
  count_ += values.size();
  segments_.emplace_back(std::move(values));
}

std::vector<Value> ResultSet::collect(std::span<const Value> column) const {
  std::vector<Value> out;
  out.reserve(count_);
  for (const auto& segment : segments_) {
    if (const auto* view = std::get_if<View>(&segment)) {
      auto part = column.subspan(static_cast<std::size_t>(view->begin), view->size());
      out.insert(out.end(), part.begin(), part.end());
    } else {
      const auto& buffer = std::get<std::vector<Value>>(segment);
      out.insert(out.end(), buffer.begin(), buffer.end());
    }
  }
  return out;
}

}  // namespace scrack
