#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "doe/design.hpp"

namespace doe {

/// Radical inverse of `index` in the given base.
double radical_inverse(std::uint64_t index, std::uint32_t base);

/// The k-th prime (0-based), up to the table limit of 64 dimensions.
std::uint32_t nth_prime(std::size_t k);

/// Deterministic Halton sequence: axis k uses the radical inverse in the
/// k-th prime base. Emission starts at index 1 so the origin never appears.
/// Copying the state forks the stream.
class HaltonSequence {
 public:
  explicit HaltonSequence(std::size_t dim, std::uint64_t start_index = 1);

  std::size_t dim() const { return dim_; }
  std::uint64_t next_index() const { return index_; }

  /// Emits the next point.
  std::vector<double> next();
  void next(std::span<double> out);

  /// Convenience: the first n points as a design.
  DesignMatrix take(std::size_t n);

 private:
  std::size_t dim_;
  std::uint64_t index_;
};

}  // namespace doe
