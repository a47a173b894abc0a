#include "figgie/event_queue.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace figgie {

namespace {

// std heap algorithms build a max-heap; "later" events compare less.
bool later(const Event& a, const Event& b) noexcept {
  if (a.time != b.time) return a.time > b.time;
  return a.seq > b.seq;
}

}  // namespace

std::uint64_t EventQueue::schedule(Event event) {
  if (!(event.time >= now_)) {
    throw std::logic_error("event scheduled at t=" + std::to_string(event.time) + " before clock t=" +
                           std::to_string(now_));
  }
  const std::uint64_t seq = next_seq_++;
  event.seq = seq;
  heap_.push_back(std::move(event));
  std::push_heap(heap_.begin(), heap_.end(), later);
  return seq;
}

Event EventQueue::pop() {
  if (heap_.empty()) throw std::logic_error("pop from empty event queue");
  std::pop_heap(heap_.begin(), heap_.end(), later);
  Event e = std::move(heap_.back());
  heap_.pop_back();
  now_ = e.time;
  return e;
}

const Event& EventQueue::top() const {
  if (heap_.empty()) throw std::logic_error("top of empty event queue");
  return heap_.front();
}

void AgentTiming::validate() const {
  if (!(consideration_rate > 0.0) || !std::isfinite(consideration_rate)) {
    throw std::invalid_argument("consideration_rate must be a positive finite number");
  }
  if (!(latency >= 0.0) || !std::isfinite(latency)) {
    throw std::invalid_argument("latency must be a nonnegative finite number");
  }
}

double next_consideration_delay(double rate, Rng& rng) {
  if (!(rate > 0.0)) throw std::invalid_argument("consideration rate must be positive");
  return std::exponential_distribution<double>(rate)(rng);
}

Event schedule_order_arrival(const AgentTiming& timing, AgentId agent, SimTime now, const OrderRequest& order) {
  Event e;
  e.time = now + 2.0 * timing.latency;
  e.kind = EventKind::kAddOrder;
  e.agent = agent;
  e.order = order;
  return e;
}

Event reschedule_consideration(const AgentTiming& timing, AgentId agent, SimTime completion_time, Rng& rng) {
  Event e;
  e.time = completion_time + next_consideration_delay(timing.consideration_rate, rng);
  e.kind = EventKind::kConsideration;
  e.agent = agent;
  return e;
}

}  // namespace figgie
