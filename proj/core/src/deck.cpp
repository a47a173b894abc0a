#include "figgie/deck.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace figgie {

namespace {

constexpr DeckSpec make_deck(int i, std::array<int, kNumSuits> counts) {
  DeckSpec d;
  d.index = i;
  d.counts = counts;
  for (std::size_t s = 0; s < kNumSuits; ++s) {
    if (counts[s] == 12) d.common_suit = suit_at(s);
  }
  d.goal_suit = partner(d.common_suit);
  const bool short_goal = counts[index(d.goal_suit)] == 8;
  d.majority_threshold = short_goal ? 5 : 6;
  d.majority_payout = short_goal ? 120.0 : 100.0;
  return d;
}

// Spades, clubs, hearts, diamonds.
constexpr std::array<DeckSpec, kNumDecks> kDecks = {
    make_deck(0, {12, 8, 10, 10}),  make_deck(1, {12, 10, 8, 10}),  make_deck(2, {12, 10, 10, 8}),
    make_deck(3, {8, 12, 10, 10}),  make_deck(4, {10, 12, 8, 10}),  make_deck(5, {10, 12, 10, 8}),
    make_deck(6, {8, 10, 12, 10}),  make_deck(7, {10, 8, 12, 10}),  make_deck(8, {10, 10, 12, 8}),
    make_deck(9, {8, 10, 10, 12}),  make_deck(10, {10, 8, 10, 12}), make_deck(11, {10, 10, 8, 12}),
};

}  // namespace

const std::array<DeckSpec, kNumDecks>& deck_table() noexcept { return kDecks; }

const DeckSpec& deck(int i) {
  if (i < 0 || i >= static_cast<int>(kNumDecks)) throw std::out_of_range("deck index must be in [0, 12)");
  return kDecks[static_cast<std::size_t>(i)];
}

Hands deal(const DeckSpec& d, Rng& rng) {
  std::vector<Suit> cards;
  cards.reserve(kDeckSize);
  for (Suit s : kAllSuits) cards.insert(cards.end(), static_cast<std::size_t>(d.count(s)), s);
  std::shuffle(cards.begin(), cards.end(), rng);
  Hands hands{};
  for (std::size_t c = 0; c < cards.size(); ++c) ++hands[c / kHandSize][index(cards[c])];
  return hands;
}

Deal select_and_deal(Rng& rng) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(kNumDecks) - 1);
  Deal out;
  out.deck = &kDecks[static_cast<std::size_t>(pick(rng))];
  out.hands = deal(*out.deck, rng);
  return out;
}

std::array<double, kNumPlayers> settle(const DeckSpec& d, const Hands& hands, double pot) {
  if (pot != kPot) throw std::invalid_argument("settlement expects the full pot");
  const std::size_t goal = index(d.goal_suit);
  int total = 0;
  int most = 0;
  for (const Hand& h : hands) {
    if (h[goal] < 0) throw std::invalid_argument("negative card count");
    total += h[goal];
    most = std::max(most, h[goal]);
  }
  if (total != d.count(d.goal_suit)) throw std::invalid_argument("hands do not hold the deck's goal cards");

  std::array<double, kNumPlayers> payouts{};
  int leaders = 0;
  for (std::size_t p = 0; p < kNumPlayers; ++p) {
    payouts[p] = kGoalCardPayout * hands[p][goal];
    if (hands[p][goal] == most) ++leaders;
  }
  const double remainder = pot - kGoalCardPayout * total;
  for (std::size_t p = 0; p < kNumPlayers; ++p) {
    if (hands[p][goal] == most) payouts[p] += remainder / leaders;
  }
  return payouts;
}

}  // namespace figgie
