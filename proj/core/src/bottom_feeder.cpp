#include "figgie/bottom_feeder.hpp"

#include <numeric>

namespace figgie {

namespace {

double mean_of_last(std::span<const double> prices, std::size_t k) {
  const auto tail = prices.last(k);
  return std::accumulate(tail.begin(), tail.end(), 0.0) / static_cast<double>(k);
}

}  // namespace

std::optional<double> bottom_feeder_expectation(const MarketView& view, Suit asset, const BottomFeederParams& params) {
  const auto k = static_cast<std::size_t>(params.k);
  double sum = 0.0;
  int qualifying = 0;
  for (AgentId prey : params.prey) {
    const auto buys = view.order_history(prey, asset, Side::kBuy);
    const auto sells = view.order_history(prey, asset, Side::kSell);
    if (buys.size() < k || sells.size() < k) continue;
    sum += 0.5 * (mean_of_last(buys, k) + mean_of_last(sells, k));
    ++qualifying;
  }
  if (qualifying == 0) return std::nullopt;
  return sum / qualifying;
}

Decision BottomFeeder::consider(const MarketView& view, Rng& rng) {
  Decision d;
  const Suit asset = pick_asset(rng);
  const auto estimate = bottom_feeder_expectation(view, asset, params_);
  if (!estimate) return d;
  const ExpectationPair pair{*estimate, *estimate};
  d.expectations[index(asset)] = pair;
  d.order = send_order(pair, asset, view, rng, volume_);
  return d;
}

}  // namespace figgie
