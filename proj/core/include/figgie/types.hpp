#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace figgie {

inline constexpr std::size_t kNumPlayers = 4;
inline constexpr std::size_t kNumSuits = 4;
inline constexpr std::size_t kNumDecks = 12;
inline constexpr int kDeckSize = 40;
inline constexpr int kHandSize = 10;

// Cash figures. Each player holds 350 after posting a 50 ante, so the table
// always carries 4 * (350 + 50) in cash plus pot.
inline constexpr double kStartingCash = 350.0;
inline constexpr double kAnte = 50.0;
inline constexpr double kPot = kAnte * kNumPlayers;
inline constexpr double kTotalWealth = (kStartingCash + kAnte) * kNumPlayers;
inline constexpr double kGoalCardPayout = 10.0;

// Simulation time units. Nonnegative and nondecreasing along a run.
using SimTime = double;

using AgentId = std::uint8_t;

enum class Suit : std::uint8_t { kSpades = 0, kClubs = 1, kHearts = 2, kDiamonds = 3 };

enum class Side : std::uint8_t { kBuy, kSell };

enum class OrderId : std::uint32_t {};

inline constexpr std::array<Suit, kNumSuits> kAllSuits = {Suit::kSpades, Suit::kClubs, Suit::kHearts,
                                                          Suit::kDiamonds};

constexpr std::size_t index(Suit s) noexcept { return static_cast<std::size_t>(s); }
constexpr Suit suit_at(std::size_t i) noexcept { return static_cast<Suit>(i); }
constexpr std::uint32_t raw(OrderId id) noexcept { return static_cast<std::uint32_t>(id); }

// Same-colour partner: spades <-> clubs, hearts <-> diamonds.
constexpr Suit partner(Suit s) noexcept { return static_cast<Suit>(index(s) ^ 1U); }

constexpr std::string_view suit_name(Suit s) noexcept {
  switch (s) {
    case Suit::kSpades: return "spades";
    case Suit::kClubs: return "clubs";
    case Suit::kHearts: return "hearts";
    case Suit::kDiamonds: return "diamonds";
  }
  return "?";
}

constexpr std::string_view side_name(Side s) noexcept { return s == Side::kBuy ? "buy" : "sell"; }

// Per-player, per-suit card counts.
using Hand = std::array<int, kNumSuits>;
using Hands = std::array<Hand, kNumPlayers>;

// Mutable card and cash positions of all players; the exchange settles trades against it.
struct Holdings {
  Hands cards{};
  std::array<double, kNumPlayers> cash{};
};

}  // namespace figgie
