#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "scrack/baseline.hpp"
#include "scrack/stochastic.hpp"

namespace scrack {

struct SelectiveConfig {
  StochasticKind inner = StochasticKind::kMdd1r;
  std::uint64_t period = 2;
  double coin_p = 0.5;
  std::uint64_t monitor_threshold = 5;
  std::size_t size_threshold = 8192;

  void validate() const;
};

/// Called once per end piece a selective handler processes, with whether the
/// stochastic method was chosen for it.
using PieceDecisionObserver = std::function<void(const Piece&, bool stochastic)>;

/// Per-piece crack counters: stochastic cracking takes over a piece once it
/// has been cracked `threshold` times. Cracking a piece hands its new
/// counter to every piece it splits into; the stochastic method resets the
/// counters of all resulting pieces to zero.
class ScrackMonHandler final : public EndPieceHandler {
 public:
  ScrackMonHandler(std::uint64_t threshold, StochasticCracking& inner);

  bool materializes(const CrackedColumn& col, const Piece& piece) override;
  Position crack_bound(CrackedColumn& col, const Piece& piece, Value bound) override;
  std::vector<Value> materialize(CrackedColumn& col, const Piece& piece, QueryRange q) override;

  std::uint64_t counter(Position piece_lo) const;
  std::uint64_t original_cracks() const { return original_cracks_; }
  std::uint64_t resets() const { return resets_; }
  void set_observer(PieceDecisionObserver observer) { observer_ = std::move(observer); }

 private:
  bool stochastic_for(const Piece& piece) const { return counter(piece.lo) >= threshold_; }
  void relabel(const CrackedColumn& col, const Piece& piece, std::uint64_t value);

  std::uint64_t threshold_;
  StochasticCracking* inner_;
  OriginalCracking original_;
  std::map<Position, std::uint64_t> counters_;
  std::uint64_t original_cracks_ = 0;
  std::uint64_t resets_ = 0;
  PieceDecisionObserver observer_;
};

/// Stochastic cracking on end pieces larger than `threshold` elements,
/// original cracking on the rest.
class SizeSwitchHandler final : public EndPieceHandler {
 public:
  SizeSwitchHandler(std::size_t threshold, StochasticCracking& inner) : threshold_(threshold), inner_(&inner) {}

  bool materializes(const CrackedColumn& col, const Piece& piece) override;
  Position crack_bound(CrackedColumn& col, const Piece& piece, Value bound) override;
  std::vector<Value> materialize(CrackedColumn& col, const Piece& piece, QueryRange q) override;

  void set_observer(PieceDecisionObserver observer) { observer_ = std::move(observer); }

 private:
  bool stochastic_for(const Piece& piece) const { return piece.size() > threshold_; }

  std::size_t threshold_;
  StochasticCracking* inner_;
  OriginalCracking original_;
  PieceDecisionObserver observer_;
};

}  // namespace scrack
