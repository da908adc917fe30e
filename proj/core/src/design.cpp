#include "doe/design.hpp"

#include <cmath>
#include <string>

namespace doe {

namespace {

void check_unit_range(double x, std::size_t point, std::size_t axis) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error("coordinate " + std::to_string(axis) + " of point " +
                std::to_string(point) + " is outside [0,1]: " +
                std::to_string(x));
  }
}

}  // namespace

DesignMatrix::DesignMatrix(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim == 0) throw Error("design dimension must be positive");
  if (coords_.size() % dim != 0) {
    throw Error("coordinate count is not a multiple of the dimension");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    check_unit_range(coords_[i], i / dim_, i % dim_);
  }
}

void DesignMatrix::append(std::span<const double> p) {
  if (dim_ == 0) dim_ = p.size();
  if (p.size() != dim_) {
    throw Error("appended point has dimension " + std::to_string(p.size()) +
                ", expected " + std::to_string(dim_));
  }
  for (std::size_t k = 0; k < p.size(); ++k) {
    check_unit_range(p[k], size(), k);
  }
  coords_.insert(coords_.end(), p.begin(), p.end());
}

Bounds::Bounds(std::vector<double> lo, std::vector<double> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size() || lower.empty()) {
    throw Error("bounds vectors must be non-empty and of equal length");
  }
  for (std::size_t k = 0; k < lower.size(); ++k) {
    if (!(lower[k] < upper[k])) {
      throw Error("bounds axis " + std::to_string(k) +
                  ": lower must be strictly below upper");
    }
  }
}

Bounds Bounds::cube(double lo, double hi, std::size_t d) {
  return Bounds(std::vector<double>(d, lo), std::vector<double>(d, hi));
}

DesignMatrix scale_to_unit(const std::vector<double>& points, std::size_t dim,
                           const Bounds& bounds) {
  if (bounds.dim() != dim) throw Error("bounds dimension mismatch");
  if (dim == 0 || points.size() % dim != 0) {
    throw Error("point buffer is not a multiple of the dimension");
  }
  std::vector<double> unit(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t k = i % dim;
    const double x = points[i];
    if (x < bounds.lower[k] || x > bounds.upper[k]) {
      throw OutOfBoundsError(
          "point " + std::to_string(i / dim) + ", coordinate " +
          std::to_string(k) + " = " + std::to_string(x) + " outside [" +
          std::to_string(bounds.lower[k]) + ", " +
          std::to_string(bounds.upper[k]) + "]");
    }
    unit[i] = (x - bounds.lower[k]) / (bounds.upper[k] - bounds.lower[k]);
    // Guard against rounding pushing an in-bounds value past 1.
    if (unit[i] > 1.0) unit[i] = 1.0;
    if (unit[i] < 0.0) unit[i] = 0.0;
  }
  return DesignMatrix(dim, std::move(unit));
}

std::vector<double> scale_from_unit(const DesignMatrix& design,
                                    const Bounds& bounds) {
  if (bounds.dim() != design.dim()) throw Error("bounds dimension mismatch");
  std::vector<double> out(design.data().size());
  for (std::size_t i = 0; i < design.size(); ++i) {
    scale_point_from_unit(design.point(i), bounds,
                          {out.data() + i * design.dim(), design.dim()});
  }
  return out;
}

void scale_point_from_unit(std::span<const double> unit, const Bounds& bounds,
                           std::span<double> out) {
  for (std::size_t k = 0; k < unit.size(); ++k) {
    out[k] = bounds.lower[k] + unit[k] * (bounds.upper[k] - bounds.lower[k]);
  }
}

}  // namespace doe
