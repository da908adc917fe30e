#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "doe/error.hpp"

namespace doe {

/// An ordered set of n points in the unit hypercube [0,1]^d. Row-major
/// storage; insertion order is preserved because the sequential samplers
/// depend on it. Immutable except for append().
class DesignMatrix {
 public:
  DesignMatrix() = default;

  explicit DesignMatrix(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw Error("design dimension must be positive");
  }

  /// Takes row-major coordinates; validates the unit-cube invariant.
  DesignMatrix(std::size_t dim, std::vector<double> coords);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const { return coords_.empty(); }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }

  double coord(std::size_t i, std::size_t k) const {
    return coords_[i * dim_ + k];
  }

  /// Appends one point; throws if the dimension or range is wrong.
  void append(std::span<const double> p);

  const std::vector<double>& data() const { return coords_; }

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

/// Per-coordinate problem-space box, lower[k] < upper[k].
struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;

  Bounds() = default;
  Bounds(std::vector<double> lo, std::vector<double> hi);

  std::size_t dim() const { return lower.size(); }

  /// Uniform box [lo, hi]^d.
  static Bounds cube(double lo, double hi, std::size_t d);
};

/// Affine map of problem-unit points (row-major) into the unit cube.
/// Throws OutOfBoundsError naming the offending point and coordinate.
DesignMatrix scale_to_unit(const std::vector<double>& points, std::size_t dim,
                           const Bounds& bounds);

/// Inverse map back to problem units, row-major.
std::vector<double> scale_from_unit(const DesignMatrix& design,
                                    const Bounds& bounds);

/// Single-point version of the inverse map, writing into `out`.
void scale_point_from_unit(std::span<const double> unit, const Bounds& bounds,
                           std::span<double> out);

}  // namespace doe
