#pragma once

#include <optional>

#include "figgie/strategy.hpp"

namespace figgie {

// Average over prey of the midpoint between the mean of its last k buy
// prices and the mean of its last k sell prices for `asset`. Prey with fewer
// than k orders on either side are skipped; nullopt when none qualify.
[[nodiscard]] std::optional<double> bottom_feeder_expectation(const MarketView& view, Suit asset,
                                                              const BottomFeederParams& params);

class BottomFeeder final : public Strategy {
 public:
  BottomFeeder(BottomFeederParams params, int volume) : params_(std::move(params)), volume_(volume) {}
  Decision consider(const MarketView& view, Rng& rng) override;
  [[nodiscard]] std::string_view kind() const noexcept override { return "bottom_feeder"; }

 private:
  BottomFeederParams params_;
  int volume_;
};

}  // namespace figgie
