#include <gtest/gtest.h>

#include <cmath>

#include "figgie/bottom_feeder.hpp"
#include "figgie/noise.hpp"
#include "figgie/strategy.hpp"

namespace figgie {
namespace {

constexpr Suit kS = Suit::kSpades;

struct Market {
  Exchange exchange;
  Holdings holdings;
  Market() {
    for (auto& h : holdings.cards) h.fill(2);
    holdings.cash.fill(kStartingCash);
  }
  void send(AgentId a, Side side, double price, Suit s = kS) {
    exchange.submit(a, OrderRequest{side, s, price, 1, 0.0}, holdings, 0.0);
  }
  [[nodiscard]] MarketView view(AgentId self = 0) const { return MarketView(exchange, holdings, self, 1.0); }
};

TEST(ClampLimitPrice, BuyCappedAtBestAsk) { EXPECT_EQ(clamp_limit_price(Side::kBuy, 6.0, 4.0), 4.0); }

TEST(ClampLimitPrice, SellFlooredAtBestBid) { EXPECT_EQ(clamp_limit_price(Side::kSell, 13.0, 20.0), 20.0); }

TEST(ClampLimitPrice, MissingOppositeSideSkipsClamp) {
  EXPECT_EQ(clamp_limit_price(Side::kBuy, 6.0, std::nullopt), 6.0);
  EXPECT_EQ(clamp_limit_price(Side::kSell, 6.0, std::nullopt), 6.0);
  EXPECT_EQ(clamp_limit_price(Side::kBuy, 3.0, 4.0), 3.0);
  EXPECT_EQ(clamp_limit_price(Side::kSell, 13.0, 4.0), 13.0);
}

TEST(SendOrder, ZeroValuationBuysAtZero) {
  Market m;
  Rng rng(1);
  int buys = 0;
  for (int i = 0; i < 200; ++i) {
    const auto o = send_order({0.0, 0.0}, kS, m.view(), rng);
    ASSERT_TRUE(o.has_value());
    if (o->side == Side::kBuy) {
      ++buys;
      EXPECT_EQ(o->price, 0.0);
    }
  }
  EXPECT_GT(buys, 50);
}

TEST(SendOrder, PricesFollowTheUniformRanges) {
  Market m;
  Rng rng(2);
  int buys = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const auto o = send_order({10.0, 12.0}, kS, m.view(), rng);
    ASSERT_TRUE(o.has_value());
    EXPECT_EQ(o->asset, kS);
    EXPECT_EQ(o->volume, 1);
    if (o->side == Side::kBuy) {
      ++buys;
      ASSERT_GE(o->price, 0.0);
      ASSERT_LT(o->price, 10.0);
    } else {
      ASSERT_GE(o->price, 12.0);
      ASSERT_LT(o->price, 24.0);
    }
  }
  // Fair coin: 4 SD band.
  EXPECT_NEAR(buys, n / 2, 4.0 * std::sqrt(n * 0.25));
}

TEST(SendOrder, NeverBuysAboveAskOrSellsBelowBid) {
  Market m;
  m.send(1, Side::kBuy, 3.0);
  m.send(2, Side::kSell, 5.0);
  Rng rng(3);
  for (int i = 0; i < 5000; ++i) {
    const double v = 20.0 * uniform01(rng);
    const auto o = send_order({v, v}, kS, m.view(), rng);
    ASSERT_TRUE(o.has_value());
    if (o->side == Side::kBuy) {
      ASSERT_LE(o->price, 5.0);
    } else {
      ASSERT_GE(o->price, 3.0);
    }
  }
}

TEST(SendOrder, CannotSellAbstainsOnSellBranch) {
  Market m;
  Rng rng(4);
  int none = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto o = send_order({5.0, 5.0}, kS, m.view(), rng, 1, false);
    if (!o) {
      ++none;
    } else {
      EXPECT_EQ(o->side, Side::kBuy);
    }
  }
  EXPECT_GT(none, 400);
  EXPECT_LT(none, 600);
}

TEST(PickAsset, CoversEverySuit) {
  Rng rng(5);
  std::array<int, kNumSuits> hits{};
  for (int i = 0; i < 4000; ++i) ++hits[index(pick_asset(rng))];
  for (int h : hits) EXPECT_NEAR(h, 1000, 4.0 * std::sqrt(4000 * 0.25 * 0.75));
}

TEST(Noise, ZeroSigmaReturnsBestBid) {
  Market m;
  m.send(1, Side::kBuy, 7.0);
  Rng rng(6);
  const auto p = noise_expectation(m.view(), kS, NoiseParams{0.0, 10.0}, rng);
  EXPECT_EQ(p.buy, 7.0);
  EXPECT_EQ(p.sell, 7.0);
}

TEST(Noise, EmptyBookFallsBackToConstant) {
  Market m;
  Rng rng(7);
  EXPECT_EQ(noise_expectation(m.view(), kS, NoiseParams{0.0, 10.0}, rng).buy, 10.0);
}

TEST(Noise, NoBidFallsBackToLastTrade) {
  Market m;
  m.send(1, Side::kBuy, 6.0);
  m.send(2, Side::kSell, 6.0);  // trades; both sides empty again
  ASSERT_FALSE(m.view().best_bid(kS));
  Rng rng(8);
  EXPECT_EQ(noise_expectation(m.view(), kS, NoiseParams{0.0, 10.0}, rng).buy, 6.0);
}

TEST(Noise, LogValuationIsNormal) {
  Market m;
  m.send(1, Side::kBuy, 1.0);
  Rng rng(9);
  const int n = 100000;
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double l = std::log(noise_expectation(m.view(), kS, NoiseParams{1.0, 10.0}, rng).buy);
    sum += l;
    sq += l * l;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.02);
  EXPECT_NEAR(sq / n, 1.0, 0.03);
}

TEST(Noise, TraderAlwaysSendsAnOrderWithMatchingExpectation) {
  Market m;
  NoiseTrader t(NoiseParams{}, 1);
  Rng rng(10);
  for (int i = 0; i < 100; ++i) {
    const Decision d = t.consider(m.view(), rng);
    ASSERT_TRUE(d.order.has_value());
    const auto& e = d.expectations[index(d.order->asset)];
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(e->buy, e->sell);
  }
}

TEST(BottomFeeder, AveragesPreyBuyAndSellMeans) {
  Market m;
  for (int i = 0; i < 4; ++i) m.send(1, Side::kBuy, 5.0);
  for (int i = 0; i < 4; ++i) m.send(1, Side::kSell, 15.0);
  BottomFeederParams p;
  p.prey = {1};
  const auto e = bottom_feeder_expectation(m.view(0), kS, p);
  ASSERT_TRUE(e.has_value());
  EXPECT_DOUBLE_EQ(*e, 10.0);
}

TEST(BottomFeeder, UsesOnlyTheLastKOrders) {
  Market m;
  m.send(1, Side::kBuy, 100.0);  // old, outside the window
  m.send(2, Side::kSell, 100.0);  // fills the 100 bid so later prices sit on an empty book
  for (int i = 0; i < 4; ++i) m.send(1, Side::kBuy, 1.0 + i);  // mean 2.5
  for (int i = 0; i < 4; ++i) m.send(1, Side::kSell, 20.0);
  BottomFeederParams p;
  p.prey = {1};
  EXPECT_DOUBLE_EQ(*bottom_feeder_expectation(m.view(0), kS, p), (2.5 + 20.0) / 2);
}

TEST(BottomFeeder, PreyWithoutKOrdersOnBothSidesIsExcluded) {
  Market m;
  for (int i = 0; i < 3; ++i) m.send(1, Side::kBuy, 5.0);
  for (int i = 0; i < 4; ++i) m.send(1, Side::kSell, 15.0);
  for (int i = 0; i < 4; ++i) m.send(2, Side::kBuy, 2.0);
  for (int i = 0; i < 4; ++i) m.send(2, Side::kSell, 30.0);
  BottomFeederParams p;
  p.prey = {1, 2};
  EXPECT_DOUBLE_EQ(*bottom_feeder_expectation(m.view(0), kS, p), 16.0);
  p.prey = {1};
  EXPECT_FALSE(bottom_feeder_expectation(m.view(0), kS, p).has_value());
}

TEST(BottomFeeder, AbstainsWithoutQualifyingPrey) {
  Market m;
  BottomFeederParams p;
  p.prey = {1, 2, 3};
  BottomFeeder b(p, 1);
  Rng rng(11);
  for (int i = 0; i < 20; ++i) EXPECT_FALSE(b.consider(m.view(0), rng).order.has_value());
}

TEST(StrategyParams, Validation) {
  EXPECT_NO_THROW(validate(NoiseParams{}, 0));
  EXPECT_THROW(validate(NoiseParams{-1.0, 10.0}, 0), std::invalid_argument);
  EXPECT_THROW(validate(FundamentalistParams{1.0}, 0), std::invalid_argument);
  EXPECT_NO_THROW(validate(FundamentalistParams{1.2}, 0));
  BottomFeederParams b;
  EXPECT_THROW(validate(b, 0), std::invalid_argument);  // empty prey
  b.prey = {1};
  b.k = 0;
  EXPECT_THROW(validate(b, 0), std::invalid_argument);
  b.k = 4;
  b.prey = {7};
  EXPECT_THROW(validate(b, 0), std::invalid_argument);
  ChartistParams c;
  c.horizon = 1;
  EXPECT_THROW(validate(c, 0), std::invalid_argument);
  c.horizon = 2;
  c.divergence_cap = INFINITY;
  EXPECT_THROW(validate(c, 0), std::invalid_argument);
}

TEST(StrategyParams, KindsAndFactory) {
  const Hand dealt{3, 3, 2, 2};
  const std::vector<StrategyParams> all = {NoiseParams{}, FundamentalistParams{},
                                           BottomFeederParams{{1}, 4}, ChartistParams{}};
  for (const auto& p : all) {
    const auto s = make_strategy(p, 0, dealt, 1);
    EXPECT_EQ(s->kind(), strategy_kind(p));
  }
}

}  // namespace
}  // namespace figgie
