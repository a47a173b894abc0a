#include "figgie/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace figgie::stats {

Summary summarize(std::span<const double> values) {
  if (values.size() < 2) throw std::invalid_argument("summary needs at least 2 values");
  Summary s;
  s.n = values.size();
  const auto n = static_cast<double>(s.n);
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.sd = std::sqrt(ss / (n - 1.0));
  s.se = s.sd / std::sqrt(n);
  return s;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile of empty data");
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("quantile level outside [0, 1]");
  std::sort(values.begin(), values.end());
  const double h = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

double median(std::vector<double> values) { return quantile(std::move(values), 0.5); }

Interval bootstrap_diff_ci(std::span<const double> a, std::span<const double> b, std::size_t resamples,
                           double alpha, std::uint64_t seed) {
  if (a.size() != b.size()) throw std::invalid_argument("bootstrap inputs differ in length");
  if (a.empty()) throw std::invalid_argument("bootstrap of empty data");
  if (resamples < 1000) throw std::invalid_argument("bootstrap needs at least 1000 resamples");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");

  const std::size_t n = a.size();
  std::vector<double> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = a[i] - b[i];

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<double> stats(resamples);
  for (double& stat : stats) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += diff[pick(rng)];
    stat = sum / static_cast<double>(n);
  }
  std::sort(stats.begin(), stats.end());
  return {quantile(stats, alpha / 2.0), quantile(stats, 1.0 - alpha / 2.0)};
}

ReturnSeries build_returns(std::span<const double> prices) {
  std::vector<double> usable;
  usable.reserve(prices.size());
  std::copy_if(prices.begin(), prices.end(), std::back_inserter(usable), [](double p) { return p > 0.0; });
  if (usable.size() < 2) throw std::invalid_argument("returns need at least 2 positive prices");
  ReturnSeries out;
  out.values.reserve(usable.size() - 1);
  for (std::size_t i = 1; i < usable.size(); ++i) out.values.push_back(std::log(usable[i] / usable[i - 1]));
  return out;
}

ReturnSeries build_returns(std::span<const Trade> trades, double period, double duration) {
  if (!(period > 0.0)) throw std::invalid_argument("period length must be positive");
  const auto periods = static_cast<std::size_t>(std::floor(duration / period));
  std::vector<double> closes;
  closes.reserve(periods);
  std::optional<double> close;
  std::size_t t = 0;
  for (std::size_t k = 0; k < periods; ++k) {
    const double end = static_cast<double>(k + 1) * period;
    for (; t < trades.size() && trades[t].time < end; ++t) {
      if (trades[t].price > 0.0) close = trades[t].price;
    }
    if (close) closes.push_back(*close);
  }
  if (closes.size() < 2) throw std::invalid_argument("returns need at least 2 closing prices");
  ReturnSeries out;
  out.period = period;
  out.values.reserve(closes.size() - 1);
  for (std::size_t i = 1; i < closes.size(); ++i) out.values.push_back(std::log(closes[i] / closes[i - 1]));
  return out;
}

std::vector<double> acf(std::span<const double> series, std::size_t max_lag) {
  const std::size_t n = series.size();
  if (n <= max_lag) throw std::invalid_argument("series must be longer than max_lag");
  const double mean = std::accumulate(series.begin(), series.end(), 0.0) / static_cast<double>(n);
  double denom = 0.0;
  for (double x : series) denom += (x - mean) * (x - mean);
  if (denom == 0.0) throw std::domain_error("autocorrelation of a constant series is undefined");
  std::vector<double> rho(max_lag + 1);
  for (std::size_t h = 0; h <= max_lag; ++h) {
    double num = 0.0;
    for (std::size_t i = 0; i + h < n; ++i) num += (series[i] - mean) * (series[i + h] - mean);
    rho[h] = num / denom;
  }
  return rho;
}

}  // namespace figgie::stats
