#include "scrack/selective.hpp"

#include <stdexcept>

namespace scrack {

void SelectiveConfig::validate() const {
  if (period < 1) throw std::invalid_argument("period must be >= 1");
  if (!(coin_p >= 0.0 && coin_p <= 1.0)) throw std::invalid_argument("coin_p must be in [0, 1]");
  if (monitor_threshold < 1) throw std::invalid_argument("monitor threshold must be >= 1");
}

ScrackMonHandler::ScrackMonHandler(std::uint64_t threshold, StochasticCracking& inner)
    : threshold_(threshold), inner_(&inner) {
  if (threshold_ < 1) throw std::invalid_argument("monitor threshold must be >= 1");
}

std::uint64_t ScrackMonHandler::counter(Position piece_lo) const {
  auto it = counters_.find(piece_lo);
  return it == counters_.end() ? 0 : it->second;
}

bool ScrackMonHandler::materializes(const CrackedColumn& col, const Piece& piece) {
  return stochastic_for(piece) && inner_->materializes(col, piece);
}

Position ScrackMonHandler::crack_bound(CrackedColumn& col, const Piece& piece, Value bound) {
  if (piece.lower == bound) return piece.lo;
  const bool stochastic = stochastic_for(piece);
  if (observer_) observer_(piece, stochastic);
  if (stochastic) {
    const Position p = inner_->crack_bound(col, piece, bound);
    relabel(col, piece, 0);
    ++resets_;
    return p;
  }
  const std::uint64_t next = counter(piece.lo) + 1;
  const Position p = original_.crack_bound(col, piece, bound);
  relabel(col, piece, next);
  ++original_cracks_;
  return p;
}

std::vector<Value> ScrackMonHandler::materialize(CrackedColumn& col, const Piece& piece, QueryRange q) {
  if (observer_) observer_(piece, true);
  auto values = inner_->materialize(col, piece, q);
  relabel(col, piece, 0);
  ++resets_;
  return values;
}

void ScrackMonHandler::relabel(const CrackedColumn& col, const Piece& piece, std::uint64_t value) {
  counters_[piece.lo] = value;
  const auto& index = col.index();
  auto it = piece.lower ? index.upper_bound(*piece.lower) : index.begin();
  const auto end = piece.upper ? index.lower_bound(*piece.upper) : index.end();
  for (; it != end; ++it) counters_[it->second] = value;
}

bool SizeSwitchHandler::materializes(const CrackedColumn& col, const Piece& piece) {
  return stochastic_for(piece) && inner_->materializes(col, piece);
}

Position SizeSwitchHandler::crack_bound(CrackedColumn& col, const Piece& piece, Value bound) {
  const bool stochastic = stochastic_for(piece);
  if (observer_) observer_(piece, stochastic);
  return stochastic ? inner_->crack_bound(col, piece, bound) : original_.crack_bound(col, piece, bound);
}

std::vector<Value> SizeSwitchHandler::materialize(CrackedColumn& col, const Piece& piece, QueryRange q) {
  if (observer_) observer_(piece, true);
  return inner_->materialize(col, piece, q);
}

}  // namespace scrack
