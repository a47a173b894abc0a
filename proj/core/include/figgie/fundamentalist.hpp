#pragma once

#include <array>
#include <span>
#include <vector>

#include "figgie/deck.hpp"
#include "figgie/strategy.hpp"

namespace figgie {

// Cards of one suit known to be in each player's hand. Known counts are
// lower bounds: a buyer is credited with what it bought, a seller debited
// but never below zero.
struct KnownCards {
  std::array<int, kNumPlayers> counts{};
  std::size_t trades_seen = 0;  // position in the suit's trade tape

  [[nodiscard]] int total() const noexcept;
};

// Starts from `self` holding `dealt` cards and nothing known about others.
[[nodiscard]] KnownCards initial_known_cards(AgentId self, int dealt);

// Folds trades [state.trades_seen, tape.size()) of one suit into the counts.
void update_known_cards(KnownCards& state, std::span<const Trade> tape);

// Probability of each deck given how many cards of each suit have been seen,
// under a uniform prior: proportional to prod_j C(count_ij, seen_j).
// Throws std::invalid_argument for out-of-range input and std::domain_error
// when every deck is contradicted.
[[nodiscard]] std::array<double, kNumDecks> deck_posterior(const std::array<int, kNumSuits>& seen);

// Majority component of a goal card's value for a holder of `held` cards:
// a r^held below the threshold, 0 at or above it, with a chosen so that the
// values for held = 0 .. threshold-1 add up to the majority payout.
[[nodiscard]] double majority_value(const DeckSpec& deck, int held, double r);

// Expected value of buying one more card of `asset` while holding `held`.
[[nodiscard]] double expected_buy_value(Suit asset, int held, std::span<const double, kNumDecks> posterior, double r);

// Expected value lost by selling one of `held` cards: the buy value at held - 1.
// Requires held >= 1.
[[nodiscard]] double expected_sell_value(Suit asset, int held, std::span<const double, kNumDecks> posterior, double r);

struct FundamentalistStep {
  std::array<std::optional<ExpectationPair>, kNumSuits> expectations{};  // sell side meaningless if held == 0
  std::vector<OrderId> deletions;
};

// Updates card counts, recomputes the posterior, values every suit and picks
// out own resting bids priced above the buy value and own asks priced below
// the sell value.
[[nodiscard]] FundamentalistStep fundamentalist_step(const MarketView& view,
                                                     std::array<KnownCards, kNumSuits>& known, double r);

class Fundamentalist final : public Strategy {
 public:
  Fundamentalist(FundamentalistParams params, AgentId self, const Hand& dealt, int volume);
  std::vector<OrderId> prepare(const MarketView& view) override;
  Decision consider(const MarketView& view, Rng& rng) override;
  [[nodiscard]] std::string_view kind() const noexcept override { return "fundamentalist"; }

  [[nodiscard]] const std::array<KnownCards, kNumSuits>& known() const noexcept { return known_; }

 private:
  FundamentalistParams params_;
  int volume_;
  std::array<KnownCards, kNumSuits> known_;
  FundamentalistStep last_;
};

}  // namespace figgie
