#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "doe/design.hpp"

namespace doe {

namespace detail {
std::size_t sobol_table_size();
std::uint32_t sobol_poly(std::size_t dim);
std::uint32_t sobol_degree(std::size_t dim);
std::uint32_t sobol_initial_m(std::size_t dim, std::size_t k);
}  // namespace detail

/// Deterministic Sobol sequence in Gray-code order with 52-bit resolution.
/// Direction numbers come from the embedded Joe-Kuo D6 table; the supported
/// dimension is detail::sobol_table_size(). Emission starts at index 1, so
/// the origin never appears. Copying the state forks the stream.
class SobolSequence {
 public:
  explicit SobolSequence(std::size_t dim, std::uint64_t start_index = 1);

  static std::size_t max_dimension() { return detail::sobol_table_size(); }

  std::size_t dim() const { return dim_; }
  std::uint64_t next_index() const { return index_; }

  std::vector<double> next();
  void next(std::span<double> out);

  DesignMatrix take(std::size_t n);

 private:
  static constexpr unsigned kBits = 52;

  std::size_t dim_;
  std::uint64_t index_;
  std::vector<std::uint64_t> directions_;  // dim_ x kBits, row-major
  std::vector<std::uint64_t> state_;       // XOR accumulator per axis
};

}  // namespace doe
