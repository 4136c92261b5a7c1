#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace fejer {

/// Generator identification pinned into every report header. Bump the
/// version if the sequence ever changes; emitted subsets are frozen to it.
inline constexpr std::string_view kRngName = "splitmix64+xoshiro256**";
inline constexpr std::string_view kRngVersion = "1.0";

namespace rng {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t splitmix64_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Next output of the splitmix64 stream; advances the state.
constexpr std::uint64_t splitmix64_next(std::uint64_t& state) {
  return splitmix64_finalize(state += kGolden);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace rng

/// Per-trial seed: output number index+1 of the splitmix64 stream seeded at
/// master. Trials are independent streams with no shared generator state.
constexpr std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  return rng::splitmix64_finalize(master + rng::kGolden * (index + 1));
}

/// xoshiro256** 1.0 (Blackman/Vigna), seeded through splitmix64 as its
/// authors recommend. Fixed, platform-independent sequence.
class Xoshiro256ss {
 public:
  explicit constexpr Xoshiro256ss(std::uint64_t seed) : state_{} {
    std::uint64_t s = seed;
    for (std::uint64_t& word : state_) word = rng::splitmix64_next(s);
  }

  constexpr std::uint64_t next() {
    const std::uint64_t result = rng::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rng::rotl(state_[3], 45);
    return result;
  }

  /// Uniform draw from {0, ..., bound-1}, unbiased via rejection sampling.
  constexpr std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t raw = next();
      if (raw >= threshold) return raw % bound;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::array<std::uint64_t, 4> state_;
};

}  // namespace fejer
