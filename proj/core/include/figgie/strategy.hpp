#pragma once

#include <array>
#include <memory>
#include <optional>
#include <set>
#include <string_view>
#include <variant>
#include <vector>

#include "figgie/event_queue.hpp"
#include "figgie/market_view.hpp"
#include "figgie/rng.hpp"

namespace figgie {

// Buy and sell valuations of one card. Equal for every strategy but the
// fundamentalist.
struct ExpectationPair {
  double buy = 0.0;
  double sell = 0.0;
};

// What one Consideration produced.
struct Decision {
  std::optional<OrderRequest> order;
  // Valuations computed this step, for logging.
  std::array<std::optional<ExpectationPair>, kNumSuits> expectations{};
  bool clamped = false;        // estimate hit the divergence cap
  bool invalid_price = false;  // estimate needed the log of a nonpositive price
};

// Each Consideration calls prepare() and, once its deletions are applied,
// consider(). Per-agent state lives in the strategy object.
class Strategy {
 public:
  virtual ~Strategy() = default;
  // Orders to lazily delete before the new order is priced.
  virtual std::vector<OrderId> prepare(const MarketView& /*view*/) { return {}; }
  virtual Decision consider(const MarketView& view, Rng& rng) = 0;
  [[nodiscard]] virtual std::string_view kind() const noexcept = 0;
};

// Limit price after clamping a sampled price against the opposite side:
// min(sampled, best ask) for buys, max(sampled, best bid) for sells.
[[nodiscard]] double clamp_limit_price(Side side, double sampled, std::optional<double> best_opposite) noexcept;

// Buys with probability 1/2 at min(U(0, buy), best ask), otherwise sells at
// max(U(sell, 2 sell), best bid). A missing best ask/bid skips the clamp.
// With `can_sell == false` the sell branch abstains.
[[nodiscard]] std::optional<OrderRequest> send_order(const ExpectationPair& pair, Suit asset, const MarketView& view,
                                                     Rng& rng, int volume = 1, bool can_sell = true);

// Suit the agent looks at this Consideration.
[[nodiscard]] Suit pick_asset(Rng& rng);

struct NoiseParams {
  double sigma = 1.0;
  double fallback_price = 10.0;
};

struct FundamentalistParams {
  double r = 2.0;
};

struct BottomFeederParams {
  std::set<AgentId> prey;
  int k = 4;
};

enum class ChartistVariant : std::uint8_t { kTelescoped, kRegression };

struct ChartistParams {
  ChartistVariant variant = ChartistVariant::kTelescoped;
  int horizon = 4;
  double divergence_cap = 1e100;
};

using StrategyParams = std::variant<NoiseParams, FundamentalistParams, BottomFeederParams, ChartistParams>;

[[nodiscard]] std::string_view strategy_kind(const StrategyParams& params) noexcept;

// Throws std::invalid_argument on out-of-range parameters.
void validate(const StrategyParams& params, AgentId self);

[[nodiscard]] std::unique_ptr<Strategy> make_strategy(const StrategyParams& params, AgentId self,
                                                      const Hand& dealt, int order_volume);

}  // namespace figgie
