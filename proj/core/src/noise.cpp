#include "figgie/noise.hpp"

#include <cmath>

namespace figgie {

ExpectationPair noise_expectation(const MarketView& view, Suit asset, const NoiseParams& params, Rng& rng) {
  double base = params.fallback_price;
  if (auto bid = view.best_bid(asset)) {
    base = *bid;
  } else if (auto last = view.last_trade_price(asset)) {
    base = *last;
  }
  double z = 0.0;
  if (params.sigma > 0.0) z = std::normal_distribution<double>(0.0, params.sigma)(rng);
  const double p = base * std::exp(z);
  return {p, p};
}

Decision NoiseTrader::consider(const MarketView& view, Rng& rng) {
  Decision d;
  const Suit asset = pick_asset(rng);
  const ExpectationPair pair = noise_expectation(view, asset, params_, rng);
  d.expectations[index(asset)] = pair;
  d.order = send_order(pair, asset, view, rng, volume_);
  return d;
}

}  // namespace figgie
