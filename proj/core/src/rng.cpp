#include "doe/rng.hpp"

namespace doe {

namespace {

// splitmix64 finalizer (Steele, Lea, Flood 2014).
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t substream(std::uint64_t root, std::uint64_t index) {
  return mix(root + 0x9E3779B97F4A7C15ull * (index + 1));
}

}  // namespace doe
