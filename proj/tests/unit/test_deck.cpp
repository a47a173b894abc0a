#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "figgie/deck.hpp"

namespace figgie {
namespace {

TEST(DeckTable, EveryDeckHasOneSuitOf12And8AndTwoOf10) {
  for (const DeckSpec& d : deck_table()) {
    auto c = d.counts;
    std::sort(c.begin(), c.end());
    EXPECT_EQ(c, (std::array<int, 4>{8, 10, 10, 12})) << "deck " << d.index;
    EXPECT_EQ(d.count(d.common_suit), 12);
    EXPECT_EQ(d.goal_suit, partner(d.common_suit));
  }
}

TEST(DeckTable, ThresholdAndPayoutFollowGoalSize) {
  for (const DeckSpec& d : deck_table()) {
    if (d.count(d.goal_suit) == 8) {
      EXPECT_EQ(d.majority_threshold, 5);
      EXPECT_EQ(d.majority_payout, 120.0);
    } else {
      EXPECT_EQ(d.count(d.goal_suit), 10);
      EXPECT_EQ(d.majority_threshold, 6);
      EXPECT_EQ(d.majority_payout, 100.0);
    }
    EXPECT_EQ(d.majority_payout + kGoalCardPayout * d.count(d.goal_suit), kPot);
  }
}

TEST(DeckTable, MatchesPublishedCompositions) {
  EXPECT_EQ(deck(0).counts, (std::array<int, 4>{12, 8, 10, 10}));
  EXPECT_EQ(deck(0).goal_suit, Suit::kClubs);
  EXPECT_EQ(deck(4).counts, (std::array<int, 4>{10, 12, 8, 10}));
  EXPECT_EQ(deck(4).goal_suit, Suit::kSpades);
  EXPECT_EQ(deck(7).counts, (std::array<int, 4>{10, 8, 12, 10}));
  EXPECT_EQ(deck(7).goal_suit, Suit::kDiamonds);
  EXPECT_EQ(deck(11).counts, (std::array<int, 4>{10, 10, 8, 12}));
  EXPECT_EQ(deck(11).goal_suit, Suit::kHearts);
  EXPECT_EQ(deck(11).majority_threshold, 5);
  int goal_decks_per_suit[4] = {};
  for (const DeckSpec& d : deck_table()) ++goal_decks_per_suit[index(d.goal_suit)];
  for (int n : goal_decks_per_suit) EXPECT_EQ(n, 3);
  EXPECT_THROW((void)deck(12), std::out_of_range);
  EXPECT_THROW((void)deck(-1), std::out_of_range);
}

TEST(Deal, HandsHoldTenCardsAndMatchTheDeck) {
  Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    const Deal d = select_and_deal(rng);
    std::array<int, kNumSuits> totals{};
    for (const Hand& h : d.hands) {
      EXPECT_EQ(std::accumulate(h.begin(), h.end(), 0), kHandSize);
      for (std::size_t s = 0; s < kNumSuits; ++s) totals[s] += h[s];
    }
    EXPECT_EQ(totals, d.deck->counts);
  }
}

TEST(Deal, FixedDeckZeroDealsTwelveSpades) {
  Rng rng(5);
  const Hands h = deal(deck(0), rng);
  int spades = 0;
  for (const Hand& hand : h) spades += hand[index(Suit::kSpades)];
  EXPECT_EQ(spades, 12);
}

TEST(Deal, DeckChoiceIsUniform) {
  Rng rng(6);
  const int n = 100000;
  std::array<int, kNumDecks> hits{};
  for (int i = 0; i < n; ++i) ++hits[static_cast<std::size_t>(select_and_deal(rng).deck->index)];
  const double p = 1.0 / kNumDecks;
  const double sd = std::sqrt(n * p * (1 - p));
  for (int h : hits) EXPECT_NEAR(h, n * p, 3.0 * sd);
}

Hands goal_holdings(const DeckSpec& d, std::array<int, 4> goal) {
  // Fill goal counts, then pad each hand to 10 with other suits in deck order.
  Hands h{};
  std::array<int, kNumSuits> left = d.counts;
  for (std::size_t p = 0; p < kNumPlayers; ++p) {
    h[p][index(d.goal_suit)] = goal[p];
    left[index(d.goal_suit)] -= goal[p];
  }
  for (std::size_t p = 0; p < kNumPlayers; ++p) {
    int need = kHandSize - goal[p];
    for (std::size_t s = 0; s < kNumSuits && need > 0; ++s) {
      if (suit_at(s) == d.goal_suit) continue;
      const int take = std::min(need, left[s]);
      h[p][s] += take;
      left[s] -= take;
      need -= take;
    }
  }
  return h;
}

TEST(Settle, SingleLeaderTakesRemainder) {
  const DeckSpec& d = deck(1);  // 10-card goal
  const auto pay = settle(d, goal_holdings(d, {6, 2, 1, 1}));
  EXPECT_EQ(pay, (std::array<double, 4>{160, 20, 10, 10}));
}

TEST(Settle, TiedLeadersSplit) {
  const DeckSpec& d = deck(0);  // 8-card goal
  const auto pay = settle(d, goal_holdings(d, {4, 4, 0, 0}));
  EXPECT_EQ(pay, (std::array<double, 4>{100, 100, 0, 0}));
}

TEST(Settle, OneAgentHoldsEverything) {
  const DeckSpec& d = deck(1);
  const auto pay = settle(d, goal_holdings(d, {10, 0, 0, 0}));
  EXPECT_EQ(pay, (std::array<double, 4>{200, 0, 0, 0}));
}

TEST(Settle, ThreeWayTieStillPaysThePot) {
  const DeckSpec& d = deck(1);
  const auto pay = settle(d, goal_holdings(d, {3, 3, 3, 1}));
  EXPECT_NEAR(pay[0], 30 + 100.0 / 3, 1e-12);
  EXPECT_NEAR(std::accumulate(pay.begin(), pay.end(), 0.0), kPot, 1e-9);
}

TEST(Settle, RandomDealsAlwaysPayExactlyThePot) {
  Rng rng(8);
  for (int i = 0; i < 2000; ++i) {
    const Deal d = select_and_deal(rng);
    const auto pay = settle(*d.deck, d.hands);
    for (double p : pay) EXPECT_GE(p, 0.0);
    EXPECT_NEAR(std::accumulate(pay.begin(), pay.end(), 0.0), kPot, 1e-9);
  }
}

TEST(Settle, RejectsInconsistentInput) {
  const DeckSpec& d = deck(1);
  Hands h = goal_holdings(d, {6, 2, 1, 1});
  EXPECT_THROW((void)settle(d, h, 150.0), std::invalid_argument);
  h[0][index(d.goal_suit)] += 1;
  EXPECT_THROW((void)settle(d, h), std::invalid_argument);
}

}  // namespace
}  // namespace figgie
