#include "figgie/fundamentalist.hpp"

#include <cmath>
#include <stdexcept>

namespace figgie {

namespace {

// C(n, k) for n <= 12.
constexpr auto kBinomial = [] {
  std::array<std::array<double, 13>, 13> c{};
  for (std::size_t n = 0; n <= 12; ++n) {
    c[n][0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0.0);
  }
  return c;
}();

}  // namespace

int KnownCards::total() const noexcept {
  int t = 0;
  for (int c : counts) t += c;
  return t;
}

KnownCards initial_known_cards(AgentId self, int dealt) {
  if (self >= kNumPlayers) throw std::out_of_range("agent id out of range");
  KnownCards k;
  k.counts[self] = dealt;
  return k;
}

void update_known_cards(KnownCards& state, std::span<const Trade> tape) {
  for (std::size_t i = state.trades_seen; i < tape.size(); ++i) {
    const Trade& t = tape[i];
    state.counts[t.buyer] += t.volume;
    if (state.counts[t.seller] < t.volume) {
      state.counts[t.seller] = 0;
    } else {
      state.counts[t.seller] -= t.volume;
    }
  }
  state.trades_seen = tape.size();
}

std::array<double, kNumDecks> deck_posterior(const std::array<int, kNumSuits>& seen) {
  for (int s : seen) {
    if (s < 0 || s > 12) throw std::invalid_argument("seen card count out of [0, 12]");
  }
  std::array<double, kNumDecks> m{};
  double total = 0.0;
  for (const DeckSpec& d : deck_table()) {
    double likelihood = 1.0;
    for (std::size_t j = 0; j < kNumSuits; ++j) {
      const auto n = static_cast<std::size_t>(d.counts[j]);
      const auto k = static_cast<std::size_t>(seen[j]);
      likelihood *= k > n ? 0.0 : kBinomial[n][k];
    }
    m[static_cast<std::size_t>(d.index)] = likelihood;
    total += likelihood;
  }
  if (total <= 0.0) throw std::domain_error("observed card counts contradict every deck");
  for (double& x : m) x /= total;
  return m;
}

double majority_value(const DeckSpec& d, int held, double r) {
  if (!(r > 1.0)) throw std::invalid_argument("majority growth factor r must exceed 1");
  if (held < 0) throw std::invalid_argument("held count must be nonnegative");
  if (held >= d.majority_threshold) return 0.0;
  const double a = d.majority_payout * (1.0 - r) / (1.0 - std::pow(r, d.majority_threshold));
  return a * std::pow(r, held);
}

double expected_buy_value(Suit asset, int held, std::span<const double, kNumDecks> posterior, double r) {
  double e = 0.0;
  for (const DeckSpec& d : deck_table()) {
    const double m = posterior[static_cast<std::size_t>(d.index)];
    if (d.goal_suit != asset || m == 0.0) continue;
    e += m * (kGoalCardPayout + majority_value(d, held, r));
  }
  return e;
}

double expected_sell_value(Suit asset, int held, std::span<const double, kNumDecks> posterior, double r) {
  if (held < 1) throw std::invalid_argument("selling requires holding a card");
  return expected_buy_value(asset, held - 1, posterior, r);
}

FundamentalistStep fundamentalist_step(const MarketView& view, std::array<KnownCards, kNumSuits>& known, double r) {
  FundamentalistStep step;
  std::array<int, kNumSuits> seen{};
  for (Suit s : kAllSuits) {
    update_known_cards(known[index(s)], view.trades(s));
    seen[index(s)] = known[index(s)].total();
  }
  const std::array<double, kNumDecks> m = deck_posterior(seen);

  for (Suit s : kAllSuits) {
    const int held = view.held(s);
    ExpectationPair pair;
    pair.buy = expected_buy_value(s, held, m, r);
    pair.sell = held >= 1 ? expected_sell_value(s, held, m, r) : 0.0;
    step.expectations[index(s)] = pair;

    // Own index is sorted by price: stale bids sit at the top end, stale asks at the bottom.
    const auto& bids = view.own_orders(s, Side::kBuy);
    for (auto it = bids.rbegin(); it != bids.rend() && it->first > pair.buy; ++it) {
      step.deletions.push_back(static_cast<OrderId>(it->second));
    }
    if (held >= 1) {
      const auto& asks = view.own_orders(s, Side::kSell);
      for (auto it = asks.begin(); it != asks.end() && it->first < pair.sell; ++it) {
        step.deletions.push_back(static_cast<OrderId>(it->second));
      }
    }
  }
  return step;
}

Fundamentalist::Fundamentalist(FundamentalistParams params, AgentId self, const Hand& dealt, int volume)
    : params_(params), volume_(volume) {
  for (Suit s : kAllSuits) known_[index(s)] = initial_known_cards(self, dealt[index(s)]);
}

std::vector<OrderId> Fundamentalist::prepare(const MarketView& view) {
  last_ = fundamentalist_step(view, known_, params_.r);
  return last_.deletions;
}

Decision Fundamentalist::consider(const MarketView& view, Rng& rng) {
  Decision d;
  d.expectations = last_.expectations;
  const Suit asset = pick_asset(rng);
  const ExpectationPair pair = *last_.expectations[index(asset)];
  d.order = send_order(pair, asset, view, rng, volume_, view.held(asset) >= 1);
  return d;
}

}  // namespace figgie
