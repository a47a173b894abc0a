#pragma once

#include <span>

#include "figgie/strategy.hpp"

namespace figgie {

struct ChartistEstimate {
  enum class Status : std::uint8_t { kOk, kInsufficientHistory, kNonpositivePrice };
  Status status = Status::kInsufficientHistory;
  double value = 0.0;    // finite, at most the divergence cap
  bool clamped = false;  // the raw projection exceeded the cap (or overflowed)
};

// Mean log return over the last `horizon` steps, ln(p_last / p_{last-horizon}) / horizon.
// Needs horizon + 1 strictly positive prices (caller checks).
[[nodiscard]] double mean_log_return(std::span<const double> prices, int horizon);

struct LogLinearFit {
  double intercept = 0.0;
  double slope = 0.0;
};

// Least-squares fit of ln p = intercept + slope * t. Needs >= 2 distinct times
// and strictly positive prices (throws std::invalid_argument otherwise).
[[nodiscard]] LogLinearFit fit_log_linear(std::span<const double> times, std::span<const double> prices);

// Projects the trade-price series (oldest first) forward.
//
// Telescoped: the latest price p times exp(mean_log_return * horizon), using
// the last horizon + 1 prices. Regression: fits the last min(horizon, n)
// prices against their trade index and evaluates the fit at the next index.
// Results above `divergence_cap` are clamped and flagged.
[[nodiscard]] ChartistEstimate chartist_expectation(std::span<const double> prices, const ChartistParams& params);

class Chartist final : public Strategy {
 public:
  Chartist(ChartistParams params, int volume) : params_(params), volume_(volume) {}
  Decision consider(const MarketView& view, Rng& rng) override;
  [[nodiscard]] std::string_view kind() const noexcept override { return "chartist"; }

 private:
  ChartistParams params_;
  int volume_;
  std::vector<double> prices_;
};

}  // namespace figgie
