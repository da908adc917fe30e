#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "doe/design.hpp"

namespace doe {

/// Minimum pairwise Euclidean distance (maxmin space-filling criterion).
/// Higher is better. Throws UndefinedMetricError for n < 2.
double intersite_distance(const DesignMatrix& design);

/// phi_p criterion: ( sum over pairs of [squared distance]^-p )^(1/p).
/// Lower raw values indicate better spreading. Throws
/// CoincidentPointsError when two points coincide and the sum would
/// overflow, UndefinedMetricError for n < 2.
double phi_p(const DesignMatrix& design, int p);

/// Minimum over pairs of the minus-infinity norm (smallest per-axis gap).
/// Zero means a collapsing pair. Throws UndefinedMetricError for n < 2.
double projected_distance(const DesignMatrix& design);

/// Crowding distance: sum of squared Euclidean distances from `candidate`
/// to every design point. Empty design yields 0.
double crowding_distance(const DesignMatrix& design,
                         std::span<const double> candidate);

/// Fraction of occupied axis intervals when [0,1] is split into n
/// equal intervals per dimension. Equals 1 exactly for a Latin Hypercube,
/// bounded below by 1/n. Requires n >= 1.
double lhs_fraction(const DesignMatrix& design);

/// Index of the interval containing x when [0,1] splits into n intervals
/// [q/n, (q+1)/n); the last interval is closed at 1.
std::size_t interval_index(double x, std::size_t n);

/// Monte Carlo estimate of the Voronoi cell volumes of the design points.
/// Draws `probes` uniform points, assigns each to its nearest generator
/// (ties to the lowest index), and returns per-generator fractions that
/// sum to 1. Requires n >= 1.
std::vector<double> voronoi_cell_areas(const DesignMatrix& design,
                                       std::uint64_t probes,
                                       std::uint64_t seed);

/// Minimum Euclidean distance from `p` to any design point.
double min_distance_to(const DesignMatrix& design, std::span<const double> p);

/// Minimum over design points of the smallest per-axis gap to `p`.
double min_projected_to(const DesignMatrix& design, std::span<const double> p);

/// Snapshot of the standard design-quality criteria. Pairwise metrics are
/// absent for n < 2; phi_p is additionally absent when points coincide.
struct MetricReport {
  std::optional<double> intersite;
  std::optional<double> projected;
  std::optional<double> phi_p;
  double lhs_fraction = 0.0;
};

MetricReport compute_metric_report(const DesignMatrix& design, int p = 2);

}  // namespace doe
