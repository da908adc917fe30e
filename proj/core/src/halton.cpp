#include "doe/halton.hpp"

#include <array>

namespace doe {

namespace {

constexpr std::array<std::uint32_t, 64> kPrimes = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,
    43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101,
    103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167,
    173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239,
    241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311};

}  // namespace

double radical_inverse(std::uint64_t index, std::uint32_t base) {
  const double inv_base = 1.0 / static_cast<double>(base);
  double factor = inv_base;
  double result = 0.0;
  while (index > 0) {
    result += static_cast<double>(index % base) * factor;
    index /= base;
    factor *= inv_base;
  }
  return result;
}

std::uint32_t nth_prime(std::size_t k) {
  if (k >= kPrimes.size()) {
    throw UnsupportedDimensionError("Halton prime table covers " +
                                    std::to_string(kPrimes.size()) +
                                    " dimensions");
  }
  return kPrimes[k];
}

HaltonSequence::HaltonSequence(std::size_t dim, std::uint64_t start_index)
    : dim_(dim), index_(start_index) {
  if (dim == 0) throw Error("dimension must be >= 1");
  nth_prime(dim - 1);  // validates against the table limit
  if (start_index == 0) throw Error("Halton emission starts at index 1");
}

void HaltonSequence::next(std::span<double> out) {
  for (std::size_t k = 0; k < dim_; ++k) {
    out[k] = radical_inverse(index_, nth_prime(k));
  }
  ++index_;
}

std::vector<double> HaltonSequence::next() {
  std::vector<double> p(dim_);
  next(std::span<double>(p));
  return p;
}

DesignMatrix HaltonSequence::take(std::size_t n) {
  DesignMatrix design(dim_);
  std::vector<double> p(dim_);
  for (std::size_t i = 0; i < n; ++i) {
    next(std::span<double>(p));
    design.append(p);
  }
  return design;
}

}  // namespace doe
