#include "doe/sobol.hpp"

#include <bit>
#include <string>

namespace doe {

namespace {

// Direction integers V_1..V_kBits for one axis, scaled so that V_k carries
// its leading bit at position (bits - k). Beyond the tabulated initial
// values the usual primitive-polynomial recurrence extends the row.
void fill_directions(std::size_t dim_index, unsigned bits,
                     std::span<std::uint64_t> out) {
  const std::uint32_t degree = detail::sobol_degree(dim_index);
  if (degree == 0) {  // first axis: all m_k = 1
    for (unsigned k = 1; k <= bits; ++k) {
      out[k - 1] = std::uint64_t{1} << (bits - k);
    }
    return;
  }
  const std::uint32_t poly = detail::sobol_poly(dim_index);
  // interior coefficient bits a_1..a_{degree-1}; leading and trailing
  // coefficients of the primitive polynomial are implicit
  const std::uint32_t a = (poly - (std::uint32_t{1} << degree) - 1) >> 1;
  for (unsigned k = 1; k <= bits; ++k) {
    if (k <= degree) {
      out[k - 1] = static_cast<std::uint64_t>(
                       detail::sobol_initial_m(dim_index, k - 1))
                   << (bits - k);
    } else {
      std::uint64_t v = out[k - 1 - degree] ^ (out[k - 1 - degree] >> degree);
      for (std::uint32_t j = 1; j < degree; ++j) {
        if ((a >> (degree - 1 - j)) & 1u) v ^= out[k - 1 - j];
      }
      out[k - 1] = v;
    }
  }
}

}  // namespace

SobolSequence::SobolSequence(std::size_t dim, std::uint64_t start_index)
    : dim_(dim), index_(start_index) {
  if (dim == 0) throw Error("dimension must be >= 1");
  if (dim > detail::sobol_table_size()) {
    throw UnsupportedDimensionError(
        "Sobol direction-number table covers " +
        std::to_string(detail::sobol_table_size()) + " dimensions, got " +
        std::to_string(dim));
  }
  if (start_index == 0) throw Error("Sobol emission starts at index 1");
  directions_.resize(dim_ * kBits);
  for (std::size_t j = 0; j < dim_; ++j) {
    fill_directions(j, kBits, {directions_.data() + j * kBits, kBits});
  }
  // Jump straight to the accumulator of index start_index - 1: in Gray-code
  // order the accumulator equals the XOR of directions selected by the bits
  // of gray(i).
  state_.assign(dim_, 0);
  const std::uint64_t i = start_index - 1;
  std::uint64_t gray = i ^ (i >> 1);
  for (unsigned bit = 0; gray != 0; ++bit, gray >>= 1) {
    if (gray & 1u) {
      for (std::size_t j = 0; j < dim_; ++j) {
        state_[j] ^= directions_[j * kBits + bit];
      }
    }
  }
}

void SobolSequence::next(std::span<double> out) {
  const unsigned flip = static_cast<unsigned>(std::countr_zero(index_));
  constexpr double scale = 0x1.0p-52;
  for (std::size_t j = 0; j < dim_; ++j) {
    state_[j] ^= directions_[j * kBits + flip];
    out[j] = static_cast<double>(state_[j]) * scale;
  }
  ++index_;
}

std::vector<double> SobolSequence::next() {
  std::vector<double> p(dim_);
  next(std::span<double>(p));
  return p;
}

DesignMatrix SobolSequence::take(std::size_t n) {
  DesignMatrix design(dim_);
  std::vector<double> p(dim_);
  for (std::size_t i = 0; i < n; ++i) {
    next(std::span<double>(p));
    design.append(p);
  }
  return design;
}

}  // namespace doe
