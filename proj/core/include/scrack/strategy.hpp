#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>

#include "scrack/baseline.hpp"
#include "scrack/selective.hpp"
#include "scrack/stochastic.hpp"

namespace scrack {

struct StrategyParams {
  StochasticConfig stochastic;
  SelectiveConfig selective;
};

/// A select operator together with the state it keeps across queries.
/// One instance serves one column for one run.
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual std::string_view name() const = 0;

  /// Resets the column's counters, then answers `q`.
  ResultSet select(CrackedColumn& col, QueryRange q) {
    col.reset_counters();
    ++queries_;
    return answer(col, q);
  }

  /// Pieces the column is logically split into from this strategy's view.
  virtual std::size_t piece_count(const CrackedColumn& col) const { return col.piece_count(); }

  /// 1-based number of the query being answered.
  std::uint64_t query_number() const { return queries_; }

 protected:
  virtual ResultSet answer(CrackedColumn& col, QueryRange q) = 0;

 private:
  std::uint64_t queries_ = 0;
};

class ScanStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "scan"; }
  std::size_t piece_count(const CrackedColumn&) const override { return 1; }

 protected:
  ResultSet answer(CrackedColumn& col, QueryRange q) override { return scan_select(col, q); }
};

class SortStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "sort"; }
  std::size_t piece_count(const CrackedColumn& col) const override { return state_.sorted ? col.size() : 1; }

 protected:
  ResultSet answer(CrackedColumn& col, QueryRange q) override { return sort_select(col, q, state_); }

 private:
  SortState state_;
};

class CrackStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "crack"; }

 protected:
  ResultSet answer(CrackedColumn& col, QueryRange q) override { return crack_select(col, q); }
};

class StochasticStrategy final : public Strategy {
 public:
  StochasticStrategy(StochasticKind kind, const StochasticConfig& config)
      : rng_(config.seed, Rng::kStrategy), handler_(kind, config, rng_) {}

  std::string_view name() const override { return to_string(handler_.kind()); }

 protected:
  ResultSet answer(CrackedColumn& col, QueryRange q) override { return answer_by_end_pieces(col, q, handler_); }

 private:
  Rng rng_;
  StochasticCracking handler_;
};

/// Every period-th query uses the stochastic method, the rest original
/// cracking. period 2 alternates starting with original cracking; period 1
/// is continuous stochastic cracking.
class PeriodicStrategy final : public Strategy {
 public:
  PeriodicStrategy(const StochasticConfig& config, const SelectiveConfig& selective);

  std::string_view name() const override { return "periodic"; }
  std::uint64_t stochastic_queries() const { return stochastic_queries_; }

 protected:
  ResultSet answer(CrackedColumn& col, QueryRange q) override;

 private:
  std::uint64_t period_;
  Rng rng_;
  StochasticCracking inner_;
  OriginalCracking original_;
  std::uint64_t stochastic_queries_ = 0;
};

/// Flips a seeded coin per query to pick stochastic or original cracking.
/// The coin draws from its own stream so the stochastic method sees the
/// same pivots it would see on its own.
class FlipCoinStrategy final : public Strategy {
 public:
  FlipCoinStrategy(const StochasticConfig& config, const SelectiveConfig& selective);

  std::string_view name() const override { return "flipcoin"; }
  std::uint64_t stochastic_queries() const { return stochastic_queries_; }

 protected:
  ResultSet answer(CrackedColumn& col, QueryRange q) override;

 private:
  double coin_p_;
  Rng rng_;
  Rng coin_;
  StochasticCracking inner_;
  OriginalCracking original_;
  std::uint64_t stochastic_queries_ = 0;
};

class ScrackMonStrategy final : public Strategy {
 public:
  ScrackMonStrategy(const StochasticConfig& config, const SelectiveConfig& selective);

  std::string_view name() const override { return "scrackmon"; }
  ScrackMonHandler& monitor() { return monitor_; }

 protected:
  ResultSet answer(CrackedColumn& col, QueryRange q) override { return answer_by_end_pieces(col, q, monitor_); }

 private:
  Rng rng_;
  StochasticCracking inner_;
  ScrackMonHandler monitor_;
};

class SizeSwitchStrategy final : public Strategy {
 public:
  SizeSwitchStrategy(const StochasticConfig& config, const SelectiveConfig& selective);

  std::string_view name() const override { return "sizeswitch"; }
  SizeSwitchHandler& switcher() { return switch_; }

 protected:
  ResultSet answer(CrackedColumn& col, QueryRange q) override { return answer_by_end_pieces(col, q, switch_); }

 private:
  Rng rng_;
  StochasticCracking inner_;
  SizeSwitchHandler switch_;
};

/// All strategy names accepted by make_strategy, in presentation order.
std::span<const std::string_view> strategy_names();

/// Throws std::invalid_argument for an unknown name or invalid parameters.
std::unique_ptr<Strategy> make_strategy(std::string_view name, const StrategyParams& params);

}  // namespace scrack
