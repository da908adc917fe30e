#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace doe {

/// Default seed used by the CLI when none is given, so casual runs reproduce.
inline constexpr std::uint64_t kDefaultSeed = 20220521;

/// Derives the seed of sub-stream `index` from a root seed. Used wherever the
/// result must not depend on how many draws earlier sub-streams consumed
/// (pool candidates, repetitions, per-repetition test clouds).
std::uint64_t substream(std::uint64_t root, std::uint64_t index);

/// Deterministic uniform generator. Wraps std::mt19937_64 but performs all
/// value mapping itself so that streams are identical across platforms and
/// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n), n >= 1. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r = engine_();
    while (r >= limit) r = engine_();
    return r % n;
  }

  /// Fisher-Yates shuffle driven by below(), independent of std::shuffle.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace doe
