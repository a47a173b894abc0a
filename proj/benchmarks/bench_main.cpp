#include <benchmark/benchmark.h>

#include <random>

#include "figgie/event_queue.hpp"
#include "figgie/exchange.hpp"
#include "figgie/fundamentalist.hpp"
#include "figgie/game.hpp"

namespace {

using namespace figgie;

void BM_EventQueueChurn(benchmark::State& state) {
  Rng rng(1);
  EventQueue q;
  for (int i = 0; i < state.range(0); ++i) {
    q.schedule(Event{next_consideration_delay(1.0, rng), 0, EventKind::kConsideration, 0, std::nullopt});
  }
  for (auto _ : state) {
    const Event e = q.pop();
    q.schedule(Event{e.time + next_consideration_delay(1.0, rng), 0, EventKind::kConsideration, e.agent, std::nullopt});
  }
}
BENCHMARK(BM_EventQueueChurn)->Arg(4)->Arg(64)->Arg(4096);

void BM_OrderSubmission(benchmark::State& state) {
  Rng rng(2);
  std::uniform_real_distribution<double> price(0.0, 20.0);
  for (auto _ : state) {
    state.PauseTiming();
    Exchange ex;
    Holdings h;
    for (auto& hand : h.cards) hand.fill(10);
    h.cash.fill(kStartingCash);
    state.ResumeTiming();
    for (int i = 0; i < state.range(0); ++i) {
      OrderRequest r{i % 2 == 0 ? Side::kBuy : Side::kSell, suit_at(static_cast<std::size_t>(i) % kNumSuits),
                     price(rng), 1, 0.0};
      benchmark::DoNotOptimize(ex.submit(static_cast<AgentId>(i % 4), r, h, i));
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OrderSubmission)->Arg(1000)->Arg(10000);

void BM_DeckPosterior(benchmark::State& state) {
  const std::array<int, kNumSuits> seen = {3, 2, 4, 1};
  for (auto _ : state) benchmark::DoNotOptimize(deck_posterior(seen));
}
BENCHMARK(BM_DeckPosterior);

GameSetup mix(int fundamentalists) {
  GameSetup s;
  for (int i = 0; i < 4; ++i) {
    s.agents.push_back(i < fundamentalists ? AgentSpec{"f", FundamentalistParams{}, {}} : AgentSpec{"n", NoiseParams{}, {}});
  }
  return s;
}

void BM_FullGame(benchmark::State& state) {
  const GameSetup setup = mix(static_cast<int>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_game(setup, ++seed));
  state.SetItemsProcessed(state.iterations() * setup.events_per_game);
}
BENCHMARK(BM_FullGame)->Arg(0)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
