#pragma once

// Slow, obviously-correct reference implementations used as test oracles.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "figgie/deck.hpp"
#include "figgie/exchange.hpp"
#include "figgie/rng.hpp"

namespace figgie::oracle {

// Sorted-list limit order book. Every match rescans all resting orders.
class ReferenceBook {
 public:
  explicit ReferenceBook(Suit asset) : asset_(asset) {}

  std::vector<Trade> add(const Order& order, Holdings& holdings, SimTime now) {
    resting_.push_back(order);
    resting_.back().placed_at = now;
    std::vector<Trade> trades;
    for (;;) {
      auto bid = best(Side::kBuy);
      auto ask = best(Side::kSell);
      if (!bid || !ask || resting_[*bid].price < resting_[*ask].price) break;
      Order& b = resting_[*bid];
      Order& a = resting_[*ask];
      int& seller_cards = holdings.cards[a.agent][index(asset_)];
      const int v = std::min({b.volume, a.volume, seller_cards});
      if (v == 0) {
        resting_.erase(resting_.begin() + static_cast<std::ptrdiff_t>(*ask));
        continue;
      }
      const double price = b.price;
      seller_cards -= v;
      holdings.cards[b.agent][index(asset_)] += v;
      holdings.cash[b.agent] -= price * v;
      holdings.cash[a.agent] += price * v;
      trades.push_back(Trade{now, asset_, b.agent, a.agent, price, v});
      b.volume -= v;
      a.volume -= v;
      std::erase_if(resting_, [](const Order& o) { return o.volume == 0; });
    }
    return trades;
  }

  void remove(OrderId id) {
    std::erase_if(resting_, [&](const Order& o) { return o.id == id; });
  }

  [[nodiscard]] std::optional<double> best_price(Side side) const {
    auto i = best(side);
    if (!i) return std::nullopt;
    return resting_[*i].price;
  }

  [[nodiscard]] const std::vector<Order>& resting() const { return resting_; }

 private:
  [[nodiscard]] std::optional<std::size_t> best(Side side) const {
    std::optional<std::size_t> out;
    for (std::size_t i = 0; i < resting_.size(); ++i) {
      const Order& o = resting_[i];
      if (o.side != side) continue;
      if (!out) {
        out = i;
        continue;
      }
      const Order& c = resting_[*out];
      const bool better_price = side == Side::kBuy ? o.price > c.price : o.price < c.price;
      if (better_price || (o.price == c.price && (o.placed_at < c.placed_at ||
                                                  (o.placed_at == c.placed_at && raw(o.id) < raw(c.id))))) {
        out = i;
      }
    }
    return out;
  }

  Suit asset_;
  std::vector<Order> resting_;
};

// Frequency of each deck among simulated deals whose first `n` cards show
// exactly `seen` of each suit, n = sum(seen). Draws continue until
// `accepted` matching samples were collected.
inline std::array<double, kNumDecks> conditioned_deck_frequencies(const std::array<int, kNumSuits>& seen,
                                                                  std::size_t accepted, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_int_distribution<int> pick_deck(0, static_cast<int>(kNumDecks) - 1);
  int n = 0;
  for (int s : seen) n += s;
  std::array<std::size_t, kNumDecks> hits{};
  std::size_t got = 0;
  while (got < accepted) {
    const DeckSpec& d = deck(pick_deck(rng));
    std::array<int, kNumSuits> left = d.counts;
    std::array<int, kNumSuits> drawn{};
    int remaining = kDeckSize;
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      // Sequential draw without replacement, rejecting as soon as a suit overshoots.
      int u = std::uniform_int_distribution<int>(0, remaining - 1)(rng);
      std::size_t s = 0;
      while (u >= left[s]) u -= left[s++];
      --left[s];
      --remaining;
      ok = ++drawn[s] <= seen[s];
    }
    if (ok) {
      ++hits[static_cast<std::size_t>(d.index)];
      ++got;
    }
  }
  std::array<double, kNumDecks> freq{};
  for (std::size_t i = 0; i < kNumDecks; ++i) freq[i] = static_cast<double>(hits[i]) / static_cast<double>(got);
  return freq;
}

inline double total_variation(const std::array<double, kNumDecks>& p, const std::array<double, kNumDecks>& q) {
  double tv = 0.0;
  for (std::size_t i = 0; i < kNumDecks; ++i) tv += std::abs(p[i] - q[i]);
  return tv / 2.0;
}

}  // namespace figgie::oracle
