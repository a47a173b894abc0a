#pragma once

#include <array>
#include <utility>

#include "figgie/rng.hpp"
#include "figgie/types.hpp"

namespace figgie {

struct DeckSpec {
  int index = 0;
  std::array<int, kNumSuits> counts{};
  Suit common_suit = Suit::kSpades;
  Suit goal_suit = Suit::kClubs;
  int majority_threshold = 0;  // goal cards that guarantee the majority
  double majority_payout = 0;  // pot remainder paid for the majority

  [[nodiscard]] int count(Suit s) const noexcept { return counts[figgie::index(s)]; }
};

// The twelve possible decks. Goal suit is the same-colour partner of the
// 12-card common suit; an 8-card goal pays (5, 120), a 10-card goal (6, 100).
[[nodiscard]] const std::array<DeckSpec, kNumDecks>& deck_table() noexcept;
[[nodiscard]] const DeckSpec& deck(int i);

struct Deal {
  const DeckSpec* deck = nullptr;
  Hands hands{};
};

// Picks a deck uniformly, shuffles its 40 cards and deals 10 to each player.
[[nodiscard]] Deal select_and_deal(Rng& rng);

// Same, with the deck fixed.
[[nodiscard]] Hands deal(const DeckSpec& deck, Rng& rng);

// 10 per goal card held; the remainder of `pot` split equally among the
// players holding the most goal cards. Throws std::invalid_argument if the
// hands disagree with the deck's goal count or pot != kPot.
[[nodiscard]] std::array<double, kNumPlayers> settle(const DeckSpec& deck, const Hands& hands, double pot = kPot);

}  // namespace figgie
