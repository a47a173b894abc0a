#pragma once

#include "figgie/strategy.hpp"

namespace figgie {

// p* = base * e^Z, Z ~ N(0, sigma^2). The base is the best bid, else the
// last trade price, else params.fallback_price.
[[nodiscard]] ExpectationPair noise_expectation(const MarketView& view, Suit asset, const NoiseParams& params,
                                                Rng& rng);

class NoiseTrader final : public Strategy {
 public:
  NoiseTrader(NoiseParams params, int volume) : params_(params), volume_(volume) {}
  Decision consider(const MarketView& view, Rng& rng) override;
  [[nodiscard]] std::string_view kind() const noexcept override { return "noise"; }

 private:
  NoiseParams params_;
  int volume_;
};

}  // namespace figgie
