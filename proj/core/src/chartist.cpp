#include "figgie/chartist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace figgie {

double mean_log_return(std::span<const double> prices, int horizon) {
  const std::size_t n = prices.size();
  const auto h = static_cast<std::size_t>(horizon);
  if (horizon < 1 || n < h + 1) throw std::invalid_argument("need horizon + 1 prices");
  return std::log(prices[n - 1] / prices[n - 1 - h]) / horizon;
}

LogLinearFit fit_log_linear(std::span<const double> times, std::span<const double> prices) {
  if (times.size() != prices.size() || times.size() < 2) {
    throw std::invalid_argument("log-linear fit needs >= 2 paired points");
  }
  const auto n = static_cast<double>(times.size());
  double t_mean = 0.0;
  double y_mean = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(prices[i] > 0.0)) throw std::invalid_argument("log-linear fit needs positive prices");
    t_mean += times[i];
    y_mean += std::log(prices[i]);
  }
  t_mean /= n;
  y_mean /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double dt = times[i] - t_mean;
    sxx += dt * dt;
    sxy += dt * (std::log(prices[i]) - y_mean);
  }
  if (sxx == 0.0) throw std::invalid_argument("log-linear fit needs distinct times");
  const double slope = sxy / sxx;
  return {y_mean - slope * t_mean, slope};
}

ChartistEstimate chartist_expectation(std::span<const double> prices, const ChartistParams& params) {
  ChartistEstimate out;
  const std::size_t n = prices.size();
  const auto h = static_cast<std::size_t>(params.horizon);
  double log_estimate = 0.0;

  if (params.variant == ChartistVariant::kTelescoped) {
    if (n < h + 1) return out;
    const auto window = prices.last(h + 1);
    if (std::any_of(window.begin(), window.end(), [](double p) { return !(p > 0.0); })) {
      out.status = ChartistEstimate::Status::kNonpositivePrice;
      return out;
    }
    log_estimate = std::log(window.back()) + mean_log_return(window, params.horizon) * params.horizon;
  } else {
    const std::size_t m = std::min(h, n);
    if (m < 2) return out;
    const auto window = prices.last(m);
    if (std::any_of(window.begin(), window.end(), [](double p) { return !(p > 0.0); })) {
      out.status = ChartistEstimate::Status::kNonpositivePrice;
      return out;
    }
    std::vector<double> times(m);
    for (std::size_t i = 0; i < m; ++i) times[i] = static_cast<double>(n - m + i);
    const LogLinearFit fit = fit_log_linear(times, window);
    log_estimate = fit.intercept + fit.slope * static_cast<double>(n);
  }

  out.status = ChartistEstimate::Status::kOk;
  if (!(log_estimate <= std::log(params.divergence_cap))) {
    out.value = params.divergence_cap;
    out.clamped = true;
  } else {
    out.value = std::min(std::exp(log_estimate), params.divergence_cap);
  }
  return out;
}

Decision Chartist::consider(const MarketView& view, Rng& rng) {
  Decision d;
  const Suit asset = pick_asset(rng);
  const auto tape = view.trades(asset);
  prices_.resize(tape.size());
  std::transform(tape.begin(), tape.end(), prices_.begin(), [](const Trade& t) { return t.price; });

  const ChartistEstimate est = chartist_expectation(prices_, params_);
  d.clamped = est.clamped;
  d.invalid_price = est.status == ChartistEstimate::Status::kNonpositivePrice;
  if (est.status != ChartistEstimate::Status::kOk) return d;
  const ExpectationPair pair{est.value, est.value};
  d.expectations[index(asset)] = pair;
  d.order = send_order(pair, asset, view, rng, volume_);
  return d;
}

}  // namespace figgie
