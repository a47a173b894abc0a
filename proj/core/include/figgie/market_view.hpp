#pragma once

#include <optional>
#include <span>

#include "figgie/exchange.hpp"
#include "figgie/types.hpp"

namespace figgie {

// Read-only window onto the market handed to an agent at a Consideration.
class MarketView {
 public:
  MarketView(const Exchange& exchange, const Holdings& holdings, AgentId self, SimTime now) noexcept
      : exchange_(&exchange), holdings_(&holdings), self_(self), now_(now) {}

  [[nodiscard]] AgentId self() const noexcept { return self_; }
  [[nodiscard]] SimTime now() const noexcept { return now_; }

  [[nodiscard]] std::optional<double> best_bid(Suit s) const { return exchange_->best_bid(s); }
  [[nodiscard]] std::optional<double> best_ask(Suit s) const { return exchange_->best_ask(s); }
  [[nodiscard]] std::optional<double> last_trade_price(Suit s) const { return exchange_->last_trade_price(s); }
  [[nodiscard]] std::span<const Trade> trades(Suit s) const noexcept { return exchange_->trades(s); }
  [[nodiscard]] std::span<const double> order_history(AgentId agent, Suit s, Side side) const noexcept {
    return exchange_->order_history(agent, s, side);
  }
  [[nodiscard]] const Exchange::OwnIndex& own_orders(Suit s, Side side) const noexcept {
    return exchange_->own_orders(self_, s, side);
  }

  [[nodiscard]] int held(Suit s) const noexcept { return holdings_->cards[self_][index(s)]; }
  [[nodiscard]] const Hand& hand() const noexcept { return holdings_->cards[self_]; }
  [[nodiscard]] double cash() const noexcept { return holdings_->cash[self_]; }

 private:
  const Exchange* exchange_;
  const Holdings* holdings_;
  AgentId self_;
  SimTime now_;
};

}  // namespace figgie
