#include "doe/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "doe/rng.hpp"

namespace doe {

namespace {

void require_pair(const DesignMatrix& design, const char* name) {
  if (design.size() < 2) {
    throw UndefinedMetricError(std::string(name) +
                               " requires at least two points");
  }
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    s += diff * diff;
  }
  return s;
}

}  // namespace

double intersite_distance(const DesignMatrix& design) {
  require_pair(design, "intersite_distance");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < design.size(); ++i) {
    for (std::size_t j = i + 1; j < design.size(); ++j) {
      best = std::min(best, squared_distance(design.point(i), design.point(j)));
    }
  }
  return std::sqrt(best);
}

double phi_p(const DesignMatrix& design, int p) {
  require_pair(design, "phi_p");
  if (p < 1) throw Error("phi_p power must be >= 1");
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < design.size(); ++i) {
    for (std::size_t j = i + 1; j < design.size(); ++j) {
      const double d2 = squared_distance(design.point(i), design.point(j));
      if (d2 == 0.0) {
        throw CoincidentPointsError("phi_p undefined: points " +
                                    std::to_string(i) + " and " +
                                    std::to_string(j) + " coincide");
      }
      sum += std::pow(d2, -p);
    }
  }
  return std::pow(sum, 1.0 / p);
}

double projected_distance(const DesignMatrix& design) {
  require_pair(design, "projected_distance");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < design.size(); ++i) {
    for (std::size_t j = i + 1; j < design.size(); ++j) {
      const auto a = design.point(i);
      const auto b = design.point(j);
      double gap = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < a.size(); ++k) {
        gap = std::min(gap, std::abs(a[k] - b[k]));
      }
      best = std::min(best, gap);
    }
  }
  return best;
}

double crowding_distance(const DesignMatrix& design,
                         std::span<const double> candidate) {
  double sum = 0.0;
  for (std::size_t i = 0; i < design.size(); ++i) {
    sum += squared_distance(design.point(i), candidate);
  }
  return sum;
}

std::size_t interval_index(double x, std::size_t n) {
  const auto q = static_cast<std::size_t>(x * static_cast<double>(n));
  return std::min(q, n - 1);  // x == 1.0 belongs to the last interval
}

double lhs_fraction(const DesignMatrix& design) {
  if (design.size() == 0) {
    throw UndefinedMetricError("lhs_fraction requires at least one point");
  }
  const std::size_t n = design.size();
  const std::size_t d = design.dim();
  std::size_t occupied = 0;
  std::vector<char> seen(n);
  for (std::size_t k = 0; k < d; ++k) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      seen[interval_index(design.coord(i, k), n)] = 1;
    }
    for (std::size_t q = 0; q < n; ++q) occupied += seen[q];
  }
  return static_cast<double>(occupied) / static_cast<double>(n * d);
}

std::vector<double> voronoi_cell_areas(const DesignMatrix& design,
                                       std::uint64_t probes,
                                       std::uint64_t seed) {
  if (design.size() == 0) {
    throw UndefinedMetricError("voronoi_cell_areas requires points");
  }
  if (probes == 0) throw Error("probe count must be positive");
  Rng rng(seed);
  std::vector<std::uint64_t> hits(design.size(), 0);
  std::vector<double> probe(design.dim());
  for (std::uint64_t t = 0; t < probes; ++t) {
    for (auto& x : probe) x = rng.uniform();
    std::size_t nearest = 0;
    double best = squared_distance(design.point(0), probe);
    for (std::size_t i = 1; i < design.size(); ++i) {
      const double d2 = squared_distance(design.point(i), probe);
      if (d2 < best) {  // strict: ties stay with the lowest index
        best = d2;
        nearest = i;
      }
    }
    ++hits[nearest];
  }
  std::vector<double> areas(design.size());
  for (std::size_t i = 0; i < areas.size(); ++i) {
    areas[i] = static_cast<double>(hits[i]) / static_cast<double>(probes);
  }
  return areas;
}

double min_distance_to(const DesignMatrix& design, std::span<const double> p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < design.size(); ++i) {
    best = std::min(best, squared_distance(design.point(i), p));
  }
  return std::sqrt(best);
}

double min_projected_to(const DesignMatrix& design,
                        std::span<const double> p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < design.size(); ++i) {
    const auto q = design.point(i);
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < p.size(); ++k) {
      gap = std::min(gap, std::abs(q[k] - p[k]));
    }
    best = std::min(best, gap);
  }
  return best;
}

MetricReport compute_metric_report(const DesignMatrix& design, int p) {
  MetricReport report;
  report.lhs_fraction = lhs_fraction(design);
  if (design.size() >= 2) {
    report.intersite = intersite_distance(design);
    report.projected = projected_distance(design);
    try {
      report.phi_p = phi_p(design, p);
    } catch (const CoincidentPointsError&) {
      // intersite reports 0 in this case; phi_p stays absent
    }
  }
  return report;
}

}  // namespace doe
