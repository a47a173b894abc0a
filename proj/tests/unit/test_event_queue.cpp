#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "figgie/event_queue.hpp"

namespace figgie {
namespace {

Event at(SimTime t, AgentId agent = 0) { return Event{t, 0, EventKind::kConsideration, agent, std::nullopt}; }

TEST(EventQueue, PopsInTimeOrder) {
  EventQueue q;
  q.schedule(at(3.0, 3));
  q.schedule(at(1.0, 1));
  q.schedule(at(2.0, 2));
  EXPECT_EQ(q.pop().agent, 1);
  EXPECT_EQ(q.pop().agent, 2);
  EXPECT_EQ(q.pop().agent, 3);
  EXPECT_TRUE(q.empty());
}

TEST(EventQueue, EqualTimesPopInInsertionOrder) {
  EventQueue q;
  for (AgentId a = 0; a < 4; ++a) q.schedule(at(5.0, a));
  for (AgentId a = 0; a < 4; ++a) EXPECT_EQ(q.pop().agent, a);
}

TEST(EventQueue, ClockFollowsPoppedEvents) {
  EventQueue q;
  q.schedule(at(0.5));
  q.schedule(at(2.5));
  EXPECT_EQ(q.now(), 0.0);
  q.pop();
  EXPECT_EQ(q.now(), 0.5);
  q.pop();
  EXPECT_EQ(q.now(), 2.5);
}

TEST(EventQueue, RejectsEventsInThePast) {
  EventQueue q;
  q.schedule(at(2.0));
  q.pop();
  EXPECT_THROW(q.schedule(at(1.0)), std::logic_error);
  EXPECT_NO_THROW(q.schedule(at(2.0)));
}

TEST(EventQueue, PopOnEmptyThrows) {
  EventQueue q;
  EXPECT_THROW(q.pop(), std::logic_error);
}

TEST(EventQueue, SequenceNumbersIncrease) {
  EventQueue q;
  const auto a = q.schedule(at(1.0));
  const auto b = q.schedule(at(0.5));
  EXPECT_LT(a, b);
  EXPECT_EQ(q.pop().seq, b);
}

TEST(EventQueue, RandomScheduleDrainsSorted) {
  Rng rng(11);
  EventQueue q;
  std::vector<std::pair<double, std::uint64_t>> expected;
  for (int i = 0; i < 2000; ++i) {
    // Coarse times force plenty of ties.
    const double t = std::floor(uniform01(rng) * 50.0);
    expected.emplace_back(t, q.schedule(at(t)));
  }
  std::sort(expected.begin(), expected.end());
  for (const auto& [t, seq] : expected) {
    const Event e = q.pop();
    ASSERT_EQ(e.time, t);
    ASSERT_EQ(e.seq, seq);
  }
}

TEST(AgentTiming, Validation) {
  EXPECT_NO_THROW((AgentTiming{1.0, 0.0}.validate()));
  EXPECT_THROW((AgentTiming{0.0, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((AgentTiming{-1.0, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((AgentTiming{1.0, -0.1}.validate()), std::invalid_argument);
  EXPECT_THROW((AgentTiming{1.0, INFINITY}.validate()), std::invalid_argument);
}

TEST(ConsiderationDelay, MeanIsInverseRate) {
  for (double rate : {0.5, 1.0, 4.0}) {
    Rng rng(5);
    const int n = 200000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = next_consideration_delay(rate, rng);
      ASSERT_GE(d, 0.0);
      sum += d;
    }
    // Exponential: SD equals the mean, so the sample mean has SE (1/rate)/sqrt(n).
    EXPECT_NEAR(sum / n, 1.0 / rate, 4.0 / rate / std::sqrt(n));
  }
}

TEST(ConsiderationDelay, RejectsNonpositiveRate) {
  Rng rng(1);
  EXPECT_THROW((void)next_consideration_delay(0.0, rng), std::invalid_argument);
}

TEST(OrderArrival, ShiftedByTwiceTheLatency) {
  const OrderRequest req{Side::kBuy, Suit::kHearts, 7.0, 1, 3.0};
  const Event e = schedule_order_arrival(AgentTiming{1.0, 2.5}, 2, 3.0, req);
  EXPECT_EQ(e.kind, EventKind::kAddOrder);
  EXPECT_EQ(e.agent, 2);
  EXPECT_DOUBLE_EQ(e.time, 8.0);
  ASSERT_TRUE(e.order.has_value());
  EXPECT_EQ(e.order->price, 7.0);
}

TEST(OrderArrival, ZeroLatencyArrivesImmediately) {
  const Event e = schedule_order_arrival(AgentTiming{}, 0, 4.0, OrderRequest{});
  EXPECT_EQ(e.time, 4.0);
}

TEST(Reschedule, ConsiderationFollowsCompletion) {
  Rng rng(9);
  const Event e = reschedule_consideration(AgentTiming{2.0, 50.0}, 1, 10.0, rng);
  EXPECT_EQ(e.kind, EventKind::kConsideration);
  EXPECT_EQ(e.agent, 1);
  EXPECT_GE(e.time, 10.0);
  EXPECT_FALSE(e.order.has_value());
}

}  // namespace
}  // namespace figgie
