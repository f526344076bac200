#include "scrack/strategy.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace scrack {
namespace {

constexpr std::array<std::string_view, 13> kNames{
    "scan", "sort",  "crack",  "ddc",      "ddr",      "dd1c",      "dd1r",
    "mdd1r", "pmdd1r", "periodic", "flipcoin", "scrackmon", "sizeswitch",
};

const SelectiveConfig& validated(const SelectiveConfig& selective) {
  selective.validate();
  return selective;
}

}  // namespace

PeriodicStrategy::PeriodicStrategy(const StochasticConfig& config, const SelectiveConfig& selective)
    : period_(validated(selective).period), rng_(config.seed, Rng::kStrategy), inner_(selective.inner, config, rng_) {}

ResultSet PeriodicStrategy::answer(CrackedColumn& col, QueryRange q) {
  if (query_number() % period_ == 0) {
    ++stochastic_queries_;
    return answer_by_end_pieces(col, q, inner_);
  }
  return answer_by_end_pieces(col, q, original_);
}

FlipCoinStrategy::FlipCoinStrategy(const StochasticConfig& config, const SelectiveConfig& selective)
    : coin_p_(validated(selective).coin_p),
      rng_(config.seed, Rng::kStrategy),
      coin_(config.seed, Rng::kCoin),
      inner_(selective.inner, config, rng_) {}

ResultSet FlipCoinStrategy::answer(CrackedColumn& col, QueryRange q) {
  if (coin_.bernoulli(coin_p_)) {
    ++stochastic_queries_;
    return answer_by_end_pieces(col, q, inner_);
  }
  return answer_by_end_pieces(col, q, original_);
}

ScrackMonStrategy::ScrackMonStrategy(const StochasticConfig& config, const SelectiveConfig& selective)
    : rng_(config.seed, Rng::kStrategy),
      inner_(selective.inner, config, rng_),
      monitor_(validated(selective).monitor_threshold, inner_) {}

SizeSwitchStrategy::SizeSwitchStrategy(const StochasticConfig& config, const SelectiveConfig& selective)
    : rng_(config.seed, Rng::kStrategy),
      inner_(selective.inner, config, rng_),
      switch_(validated(selective).size_threshold, inner_) {}

std::span<const std::string_view> strategy_names() { return kNames; }

std::unique_ptr<Strategy> make_strategy(std::string_view name, const StrategyParams& params) {
  params.stochastic.validate();
  if (name == "scan") return std::make_unique<ScanStrategy>();
  if (name == "sort") return std::make_unique<SortStrategy>();
  if (name == "crack") return std::make_unique<CrackStrategy>();
  if (auto kind = parse_stochastic_kind(name)) return std::make_unique<StochasticStrategy>(*kind, params.stochastic);
  if (name == "periodic") return std::make_unique<PeriodicStrategy>(params.stochastic, params.selective);
  if (name == "flipcoin") return std::make_unique<FlipCoinStrategy>(params.stochastic, params.selective);
  if (name == "scrackmon") return std::make_unique<ScrackMonStrategy>(params.stochastic, params.selective);
  if (name == "sizeswitch") return std::make_unique<SizeSwitchStrategy>(params.stochastic, params.selective);
  throw std::invalid_argument("unknown strategy: " + std::string(name));
}

}  // namespace scrack
