#include "figgie/game.hpp"

#include <stdexcept>
#include <string>

namespace figgie {

void GameSetup::validate() const {
  if (agents.size() != kNumPlayers) {
    throw std::invalid_argument("agents: expected exactly 4 agents, got " + std::to_string(agents.size()));
  }
  if (events_per_game < 1) throw std::invalid_argument("events_per_game: must be >= 1");
  if (order_volume < 1) throw std::invalid_argument("order_volume: must be >= 1");
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string where = "agents[" + std::to_string(i) + "]";
    try {
      agents[i].timing.validate();
      figgie::validate(agents[i].strategy, static_cast<AgentId>(i));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
  }
}

Game::Game(const GameSetup& setup, std::uint64_t seed, GameOptions options)
    : seed_(seed), options_(options), events_limit_(static_cast<std::size_t>(setup.events_per_game)) {
  setup.validate();
  Rng deal_rng = make_stream(seed, "deal");
  Deal d = select_and_deal(deal_rng);
  deck_ = d.deck;
  dealt_ = d.hands;
  holdings_.cards = d.hands;
  holdings_.cash.fill(kStartingCash);

  agents_.reserve(kNumPlayers);
  for (std::size_t i = 0; i < kNumPlayers; ++i) {
    const auto id = static_cast<AgentId>(i);
    const AgentSpec& spec = setup.agents[i];
    agents_.push_back(Agent{spec.timing, make_strategy(spec.strategy, id, dealt_[i], setup.order_volume),
                            make_stream(seed, "strategy", i), make_stream(seed, "delay", i), {}});
  }
  for (std::size_t i = 0; i < kNumPlayers; ++i) {
    Agent& a = agents_[i];
    queue_.schedule(reschedule_consideration(a.timing, static_cast<AgentId>(i), 0.0, a.delay_rng));
  }
}

void Game::step() {
  if (finished()) throw std::logic_error("game already finished");
  const Event e = queue_.pop();
  ++events_;
  if (e.kind == EventKind::kConsideration) {
    consider(e);
  } else {
    arrive(e);
  }
}

void Game::consider(const Event& e) {
  Agent& a = agents_[e.agent];
  const MarketView view(exchange_, holdings_, e.agent, e.time);
  for (OrderId id : a.strategy->prepare(view)) exchange_.mark_deleted(id);
  const Decision d = a.strategy->consider(view, a.strategy_rng);

  if (d.clamped) ++a.stats.clamp_hits;
  if (d.invalid_price) ++a.stats.invalid_price_hits;
  if (options_.log_expectations) {
    for (Suit s : kAllSuits) {
      if (const auto& x = d.expectations[index(s)]) {
        expectations_.push_back(ExpectationSample{e.time, e.agent, s, x->buy, x->sell});
      }
    }
  }

  if (d.order) {
    ++a.stats.orders_sent;
    queue_.schedule(schedule_order_arrival(a.timing, e.agent, e.time, *d.order));
  } else {
    queue_.schedule(reschedule_consideration(a.timing, e.agent, e.time, a.delay_rng));
  }
}

void Game::arrive(const Event& e) {
  Agent& a = agents_[e.agent];
  exchange_.submit(e.agent, *e.order, holdings_, e.time);
  queue_.schedule(reschedule_consideration(a.timing, e.agent, e.time, a.delay_rng));
}

GameResult Game::result() const {
  GameResult r;
  r.seed = seed_;
  r.deck = deck_->index;
  r.goal_suit = deck_->goal_suit;
  r.events = events_;
  r.end_time = queue_.now();
  r.trade_count = exchange_.tape().size();
  r.voided_orders = exchange_.voided_count();
  const auto payouts = settle(*deck_, holdings_.cards, pot_);
  for (std::size_t i = 0; i < kNumPlayers; ++i) {
    AgentOutcome o = agents_[i].stats;
    o.cash = holdings_.cash[i];
    o.payout = payouts[i];
    o.wealth = o.cash + o.payout;
    o.holdings = holdings_.cards[i];
    r.agents[i] = o;
  }
  if (options_.record_trades) r.trades = exchange_.tape();
  if (options_.log_expectations) r.expectations = expectations_;
  return r;
}

GameResult run_game(const GameSetup& setup, std::uint64_t seed, GameOptions options) {
  Game game(setup, seed, options);
  game.run();
  return game.result();
}

}  // namespace figgie
