#pragma once

#include <array>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "figgie/event_queue.hpp"
#include "figgie/types.hpp"

namespace figgie {

struct Order {
  OrderId id{};
  AgentId agent = 0;
  Side side = Side::kBuy;
  Suit asset = Suit::kSpades;
  double price = 0.0;
  int volume = 1;  // remaining
  SimTime placed_at = 0.0;
  bool deleted = false;
};

struct Trade {
  SimTime time = 0.0;
  Suit asset = Suit::kSpades;
  AgentId buyer = 0;
  AgentId seller = 0;
  double price = 0.0;  // the buy order's limit price
  int volume = 1;
};

// Limit order book for one suit.
//
// Bids pop by (highest price, earliest placed_at, lowest id); asks by
// (lowest price, earliest placed_at, lowest id). Deleted orders stay in the
// heaps until they reach the top, where they are discarded.
class OrderBook {
 public:
  explicit OrderBook(Suit asset) : asset_(asset) {}

  // Rests `order` and matches while best bid >= best ask. Each match moves
  // v = min(bid volume, ask volume, seller's cards) cards at the bid price.
  // An ask whose seller holds no cards is voided and matching continues.
  // Buyer cash is not checked. Trades are returned in execution order.
  std::vector<Trade> add_order(const Order& order, Holdings& holdings, SimTime now);

  [[nodiscard]] std::optional<double> best_bid() const;
  [[nodiscard]] std::optional<double> best_ask() const;

  // Flags a resting order dead. Idempotent for already-deleted orders.
  // Throws std::out_of_range for ids not resting in this book.
  void mark_deleted(OrderId id);

  [[nodiscard]] const Order* find(OrderId id) const;
  [[nodiscard]] bool is_live(OrderId id) const;

  // Sell orders discarded because the seller had no cards at match time.
  [[nodiscard]] const std::vector<Order>& voided() const noexcept { return voided_; }

  // Orders filled or voided by the last add_order call (ids no longer resting).
  [[nodiscard]] const std::vector<Order>& last_removed() const noexcept { return removed_; }

  // Live (non-deleted) resting orders on one side, in no particular order.
  [[nodiscard]] std::vector<Order> resting(Side side) const;

  [[nodiscard]] Suit asset() const noexcept { return asset_; }

 private:
  struct Key {
    double price;
    SimTime placed_at;
    OrderId id;
  };
  static bool bid_below(const Key& a, const Key& b) noexcept;
  static bool ask_below(const Key& a, const Key& b) noexcept;

  void push(const Order& order);
  void pop_top(Side side);
  // Drops deleted orders from the top of one side.
  void sweep(Side side);
  [[nodiscard]] Order* top(Side side);

  Suit asset_;
  std::vector<Key> bids_;
  std::vector<Key> asks_;
  std::unordered_map<std::uint32_t, Order> orders_;
  std::vector<Order> voided_;
  std::vector<Order> removed_;
};

// All four books plus the public record: trade tape, each agent's order
// price history, and an index of each agent's live resting orders.
class Exchange {
 public:
  Exchange();

  // Assigns an id, stamps placed_at = now, records the order in the sender's
  // history, and runs matching.
  std::vector<Trade> submit(AgentId agent, const OrderRequest& request, Holdings& holdings, SimTime now);

  // Throws std::out_of_range for unknown ids. No-op for orders that are
  // already gone (filled, voided, deleted).
  void mark_deleted(OrderId id);

  [[nodiscard]] std::optional<double> best_bid(Suit s) const { return books_[index(s)].best_bid(); }
  [[nodiscard]] std::optional<double> best_ask(Suit s) const { return books_[index(s)].best_ask(); }
  [[nodiscard]] std::optional<double> last_trade_price(Suit s) const;

  [[nodiscard]] std::span<const Trade> trades(Suit s) const noexcept { return trades_[index(s)]; }
  [[nodiscard]] const std::vector<Trade>& tape() const noexcept { return tape_; }

  // Chronological limit prices of orders `agent` sent for `s` on `side`.
  [[nodiscard]] std::span<const double> order_history(AgentId agent, Suit s, Side side) const noexcept {
    return history_[agent][index(s)][side == Side::kBuy ? 0 : 1];
  }

  // Live resting orders of `agent`, sorted by (price, id).
  using OwnIndex = std::set<std::pair<double, std::uint32_t>>;
  [[nodiscard]] const OwnIndex& own_orders(AgentId agent, Suit s, Side side) const noexcept {
    return own_[agent][index(s)][side == Side::kBuy ? 0 : 1];
  }

  [[nodiscard]] const OrderBook& book(Suit s) const noexcept { return books_[index(s)]; }
  [[nodiscard]] std::size_t orders_submitted() const noexcept { return asset_of_.size(); }
  [[nodiscard]] std::size_t voided_count() const;

  // Resting orders of every book, used when the game ends.
  [[nodiscard]] std::size_t resting_count() const;

 private:
  OwnIndex& own(const Order& o) { return own_[o.agent][index(o.asset)][o.side == Side::kBuy ? 0 : 1]; }

  std::array<OrderBook, kNumSuits> books_;
  std::array<std::vector<Trade>, kNumSuits> trades_;
  std::vector<Trade> tape_;
  std::vector<Suit> asset_of_;
  std::array<std::array<std::array<std::vector<double>, 2>, kNumSuits>, kNumPlayers> history_;
  std::array<std::array<std::array<OwnIndex, 2>, kNumSuits>, kNumPlayers> own_;
};

}  // namespace figgie
