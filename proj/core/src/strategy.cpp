#include "figgie/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "figgie/bottom_feeder.hpp"
#include "figgie/chartist.hpp"
#include "figgie/fundamentalist.hpp"
#include "figgie/noise.hpp"

namespace figgie {

double clamp_limit_price(Side side, double sampled, std::optional<double> best_opposite) noexcept {
  if (!best_opposite) return sampled;
  return side == Side::kBuy ? std::min(sampled, *best_opposite) : std::max(sampled, *best_opposite);
}

std::optional<OrderRequest> send_order(const ExpectationPair& pair, Suit asset, const MarketView& view, Rng& rng,
                                       int volume, bool can_sell) {
  const bool buying = uniform01(rng) < 0.5;
  OrderRequest req;
  req.asset = asset;
  req.volume = volume;
  req.decided_at = view.now();
  if (buying) {
    req.side = Side::kBuy;
    req.price = clamp_limit_price(Side::kBuy, pair.buy * uniform01(rng), view.best_ask(asset));
  } else {
    if (!can_sell) return std::nullopt;
    req.side = Side::kSell;
    req.price = clamp_limit_price(Side::kSell, pair.sell * (1.0 + uniform01(rng)), view.best_bid(asset));
  }
  return req;
}

Suit pick_asset(Rng& rng) {
  return suit_at(std::uniform_int_distribution<std::size_t>(0, kNumSuits - 1)(rng));
}

std::string_view strategy_kind(const StrategyParams& params) noexcept {
  struct Visitor {
    std::string_view operator()(const NoiseParams&) const { return "noise"; }
    std::string_view operator()(const FundamentalistParams&) const { return "fundamentalist"; }
    std::string_view operator()(const BottomFeederParams&) const { return "bottom_feeder"; }
    std::string_view operator()(const ChartistParams&) const { return "chartist"; }
  };
  return std::visit(Visitor{}, params);
}

void validate(const StrategyParams& params, AgentId self) {
  struct Visitor {
    AgentId self;
    void operator()(const NoiseParams& p) const {
      if (!(p.sigma >= 0.0) || !std::isfinite(p.sigma)) throw std::invalid_argument("sigma must be >= 0");
      if (!(p.fallback_price >= 0.0) || !std::isfinite(p.fallback_price)) {
        throw std::invalid_argument("fallback_price must be >= 0");
      }
    }
    void operator()(const FundamentalistParams& p) const {
      if (!(p.r > 1.0) || !std::isfinite(p.r)) throw std::invalid_argument("r must be > 1");
    }
    void operator()(const BottomFeederParams& p) const {
      if (p.k < 1) throw std::invalid_argument("k must be >= 1");
      if (p.prey.empty()) throw std::invalid_argument("prey must be nonempty");
      for (AgentId a : p.prey) {
        if (a >= kNumPlayers) throw std::invalid_argument("prey id " + std::to_string(a) + " out of range");
      }
      (void)self;
    }
    void operator()(const ChartistParams& p) const {
      if (p.horizon < 2) throw std::invalid_argument("horizon must be >= 2");
      if (!(p.divergence_cap > 0.0) || !std::isfinite(p.divergence_cap)) {
        throw std::invalid_argument("divergence_cap must be positive and finite");
      }
    }
  };
  std::visit(Visitor{self}, params);
}

std::unique_ptr<Strategy> make_strategy(const StrategyParams& params, AgentId self, const Hand& dealt,
                                        int order_volume) {
  validate(params, self);
  struct Visitor {
    AgentId self;
    const Hand& dealt;
    int volume;
    std::unique_ptr<Strategy> operator()(const NoiseParams& p) const {
      return std::make_unique<NoiseTrader>(p, volume);
    }
    std::unique_ptr<Strategy> operator()(const FundamentalistParams& p) const {
      return std::make_unique<Fundamentalist>(p, self, dealt, volume);
    }
    std::unique_ptr<Strategy> operator()(const BottomFeederParams& p) const {
      return std::make_unique<BottomFeeder>(p, volume);
    }
    std::unique_ptr<Strategy> operator()(const ChartistParams& p) const {
      return std::make_unique<Chartist>(p, volume);
    }
  };
  return std::visit(Visitor{self, dealt, order_volume}, params);
}

}  // namespace figgie
