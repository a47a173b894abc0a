#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "figgie/rng.hpp"
#include "figgie/types.hpp"

namespace figgie {

// An order decided by an agent but not yet at the exchange.
struct OrderRequest {
  Side side = Side::kBuy;
  Suit asset = Suit::kSpades;
  double price = 0.0;
  int volume = 1;
  SimTime decided_at = 0.0;
};

enum class EventKind : std::uint8_t { kConsideration, kAddOrder };

struct Event {
  SimTime time = 0.0;
  std::uint64_t seq = 0;  // stamped by EventQueue::schedule
  EventKind kind = EventKind::kConsideration;
  AgentId agent = 0;
  std::optional<OrderRequest> order;  // set iff kind == kAddOrder
};

// Min-heap of events keyed by (time, seq). Ties in time pop in insertion order.
class EventQueue {
 public:
  // Stamps a fresh sequence number and inserts. Throws std::logic_error if
  // the event lies before the current clock.
  std::uint64_t schedule(Event event);

  // Removes and returns the earliest event, advancing the clock to its time.
  // Throws std::logic_error when empty.
  Event pop();

  [[nodiscard]] const Event& top() const;
  [[nodiscard]] bool empty() const noexcept { return heap_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return heap_.size(); }
  [[nodiscard]] SimTime now() const noexcept { return now_; }

  // Pending events in heap order (not sorted); for inspection only.
  [[nodiscard]] std::span<const Event> pending() const noexcept { return heap_; }

 private:
  std::vector<Event> heap_;
  std::uint64_t next_seq_ = 0;
  SimTime now_ = 0.0;
};

struct AgentTiming {
  double consideration_rate = 1.0;  // C_i, considerations per time unit
  double latency = 0.0;             // agent <-> market one-way delay

  // Throws std::invalid_argument unless rate > 0 and latency >= 0 (both finite).
  void validate() const;
};

// Exponential waiting time with mean 1/rate.
[[nodiscard]] double next_consideration_delay(double rate, Rng& rng);

// The agent sees the market at `now` and its order lands 2 * latency later.
// Observing the live market at `now` stands in for observing it one latency
// in the past, with the order arriving one latency in the future.
[[nodiscard]] Event schedule_order_arrival(const AgentTiming& timing, AgentId agent, SimTime now,
                                           const OrderRequest& order);

// Next Consideration for `agent`, one exponential delay after `completion_time`.
[[nodiscard]] Event reschedule_consideration(const AgentTiming& timing, AgentId agent,
                                             SimTime completion_time, Rng& rng);

}  // namespace figgie
