#include "figgie/rng.hpp"

namespace figgie {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

std::uint64_t game_seed(std::uint64_t master_seed, std::uint64_t game_index) noexcept {
  return mix64(master_seed ^ mix64(game_index + 1));
}

namespace {

std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Rng make_stream(std::uint64_t seed, std::string_view name, std::uint64_t index) {
  const std::uint64_t a = mix64(seed ^ fnv1a(name));
  const std::uint64_t b = mix64(a ^ mix64(index));
  std::seed_seq seq{static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32U),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32U)};
  return Rng(seq);
}

double uniform01(Rng& rng) {
  // 53 random mantissa bits.
  return static_cast<double>(rng() >> 11U) * 0x1.0p-53;
}

}  // namespace figgie
