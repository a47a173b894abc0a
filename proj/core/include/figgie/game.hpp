#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "figgie/deck.hpp"
#include "figgie/event_queue.hpp"
#include "figgie/exchange.hpp"
#include "figgie/strategy.hpp"

namespace figgie {

struct AgentSpec {
  std::string name;
  StrategyParams strategy = NoiseParams{};
  AgentTiming timing;
};

struct GameSetup {
  std::vector<AgentSpec> agents;
  int events_per_game = 10000;
  int order_volume = 1;

  // Throws std::invalid_argument with a message naming the offending field.
  void validate() const;
};

struct GameOptions {
  bool record_trades = false;
  bool log_expectations = false;
};

struct ExpectationSample {
  SimTime time = 0.0;
  AgentId agent = 0;
  Suit asset = Suit::kSpades;
  double buy = 0.0;
  double sell = 0.0;
};

struct AgentOutcome {
  double cash = 0.0;
  double payout = 0.0;
  double wealth = 0.0;
  Hand holdings{};
  std::uint32_t orders_sent = 0;
  std::uint32_t clamp_hits = 0;          // chartist estimate reached the divergence cap
  std::uint32_t invalid_price_hits = 0;  // chartist met a nonpositive price
  [[nodiscard]] bool diverged() const noexcept { return clamp_hits > 0; }
};

struct GameResult {
  std::uint64_t seed = 0;
  int deck = 0;
  Suit goal_suit = Suit::kSpades;
  std::array<AgentOutcome, kNumPlayers> agents{};
  std::size_t trade_count = 0;
  std::size_t events = 0;
  std::size_t voided_orders = 0;
  SimTime end_time = 0.0;
  std::vector<Trade> trades;                    // filled when GameOptions::record_trades
  std::vector<ExpectationSample> expectations;  // filled when GameOptions::log_expectations
};

// One game of Figgie driven event by event. step() dequeues one event; the
// game is over after setup.events_per_game events, at which point result()
// voids everything still resting or in flight and settles the pot.
class Game {
 public:
  Game(const GameSetup& setup, std::uint64_t seed, GameOptions options = {});

  [[nodiscard]] bool finished() const noexcept { return events_ >= events_limit_; }
  void step();
  void run() {
    while (!finished()) step();
  }
  [[nodiscard]] GameResult result() const;

  [[nodiscard]] const EventQueue& queue() const noexcept { return queue_; }
  [[nodiscard]] const Exchange& exchange() const noexcept { return exchange_; }
  [[nodiscard]] const Holdings& holdings() const noexcept { return holdings_; }
  [[nodiscard]] const DeckSpec& deck() const noexcept { return *deck_; }
  [[nodiscard]] const Hands& dealt() const noexcept { return dealt_; }
  [[nodiscard]] double pot() const noexcept { return pot_; }
  [[nodiscard]] std::size_t events_processed() const noexcept { return events_; }
  [[nodiscard]] SimTime clock() const noexcept { return queue_.now(); }

 private:
  struct Agent {
    AgentTiming timing;
    std::unique_ptr<Strategy> strategy;
    Rng strategy_rng;
    Rng delay_rng;
    AgentOutcome stats;
  };

  void consider(const Event& e);
  void arrive(const Event& e);

  std::uint64_t seed_;
  GameOptions options_;
  std::size_t events_limit_;
  const DeckSpec* deck_;
  Hands dealt_{};
  Holdings holdings_;
  double pot_ = kPot;
  EventQueue queue_;
  Exchange exchange_;
  std::vector<Agent> agents_;
  std::size_t events_ = 0;
  std::vector<ExpectationSample> expectations_;
};

[[nodiscard]] GameResult run_game(const GameSetup& setup, std::uint64_t seed, GameOptions options = {});

}  // namespace figgie
