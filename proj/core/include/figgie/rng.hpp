#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace figgie {

using Rng = std::mt19937_64;

// SplitMix64 finalizer.
[[nodiscard]] std::uint64_t mix64(std::uint64_t x) noexcept;

// Seed for game `game_index` of a batch: mix64(master_seed ^ mix64(game_index + 1)).
// Stable across releases so external tools can reproduce a single game.
[[nodiscard]] std::uint64_t game_seed(std::uint64_t master_seed, std::uint64_t game_index) noexcept;

// Independent stream named `name` (and `index`, e.g. an agent id) under `seed`.
// Adding a stream never perturbs the draws of another.
[[nodiscard]] Rng make_stream(std::uint64_t seed, std::string_view name, std::uint64_t index = 0);

// Uniform draw on [0, 1).
[[nodiscard]] double uniform01(Rng& rng);

}  // namespace figgie
