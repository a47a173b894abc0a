#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "figgie/exchange.hpp"

namespace figgie::stats {

struct Summary {
  double mean = 0.0;
  double sd = 0.0;  // n - 1 denominator
  double se = 0.0;  // sd / sqrt(n)
  std::size_t n = 0;
};

// Throws std::invalid_argument for fewer than 2 values.
[[nodiscard]] Summary summarize(std::span<const double> values);

// Linear-interpolation quantile of unsorted data (R type 7), q in [0, 1].
[[nodiscard]] double quantile(std::vector<double> values, double q);
[[nodiscard]] double median(std::vector<double> values);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  [[nodiscard]] bool overlaps(const Interval& o) const noexcept { return lo <= o.hi && o.lo <= hi; }
};

// Percentile bootstrap interval for mean(a) - mean(b). a[i] and b[i] come
// from the same game; each resample draws game indices with replacement so
// the pairing is kept. Throws std::invalid_argument on length mismatch,
// empty input, resamples < 1000 or alpha outside (0, 1).
[[nodiscard]] Interval bootstrap_diff_ci(std::span<const double> a, std::span<const double> b,
                                         std::size_t resamples = 10000, double alpha = 0.05,
                                         std::uint64_t seed = 0x5eed);

struct ReturnSeries {
  std::vector<double> values;         // log returns
  std::optional<double> period;       // absent for trade-by-trade returns
};

// Trade-by-trade log returns of a price sequence. Nonpositive prices are
// skipped. Throws std::invalid_argument with fewer than 2 usable prices.
[[nodiscard]] ReturnSeries build_returns(std::span<const double> prices);

// Log returns of closing prices over periods [k*period, (k+1)*period) up to
// `duration`. A period's close is its last trade price, carried forward
// through empty periods; periods before the first usable trade are skipped.
[[nodiscard]] ReturnSeries build_returns(std::span<const Trade> trades, double period, double duration);

// Sample autocorrelation for lags 0..max_lag. Throws std::invalid_argument
// when series.size() <= max_lag and std::domain_error for a constant series.
[[nodiscard]] std::vector<double> acf(std::span<const double> series, std::size_t max_lag);

}  // namespace figgie::stats
