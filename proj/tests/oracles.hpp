// Independent reference implementations used only by the tests. These stay
// deliberately naive (direct transcriptions of the defining formulas) and
// must not share code with the library paths they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace oracle {

using Point = std::vector<double>;
using PointSet = std::vector<Point>;

inline double euclid(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(s);
}

inline double min_axis_gap(const Point& a, const Point& b) {
  double g = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < a.size(); ++k) {
    g = std::min(g, std::abs(a[k] - b[k]));
  }
  return g;
}

inline double intersite(const PointSet& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::min(best, euclid(pts[i], pts[j]));
    }
  }
  return best;
}

inline double projected(const PointSet& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::min(best, min_axis_gap(pts[i], pts[j]));
    }
  }
  return best;
}

inline double phi_p(const PointSet& pts, int p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d = euclid(pts[i], pts[j]);
      sum += std::pow(d * d, -p);
    }
  }
  return std::pow(sum, 1.0 / p);
}

inline double crowding(const PointSet& pts, const Point& candidate) {
  double sum = 0.0;
  for (const auto& p : pts) {
    const double d = euclid(p, candidate);
    sum += d * d;
  }
  return sum;
}

// Occupied-interval fraction straight from the binary-variable definition:
// interval q of axis j is marked when any coordinate lies inside it.
inline double lhs_fraction(const PointSet& pts, std::size_t intervals = 0) {
  const std::size_t n = intervals == 0 ? pts.size() : intervals;
  const std::size_t d = pts.front().size();
  std::size_t total = 0;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t q = 0; q < n; ++q) {
      const double lo = static_cast<double>(q) / static_cast<double>(n);
      const double hi = static_cast<double>(q + 1) / static_cast<double>(n);
      bool occupied = false;
      for (const auto& p : pts) {
        const bool in_interval =
            (p[j] >= lo && p[j] < hi) || (q + 1 == n && p[j] == 1.0);
        if (in_interval) {
          occupied = true;
          break;
        }
      }
      total += occupied;
    }
  }
  return static_cast<double>(total) / static_cast<double>(n * d);
}

inline double min_dist_to(const PointSet& pts, const Point& c) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) best = std::min(best, euclid(p, c));
  return best;
}

inline double min_gap_to(const PointSet& pts, const Point& c) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) best = std::min(best, min_axis_gap(p, c));
  return best;
}

inline bool duplicates_any(const PointSet& pts, const Point& c) {
  for (const auto& p : pts) {
    if (p == c) return true;
  }
  return false;
}

// Exhaustive scorer for the intersite-projected objective.
inline std::size_t mip_reference(const PointSet& design,
                                 const PointSet& candidates) {
  const double n = static_cast<double>(design.size());
  const double d = static_cast<double>(design.front().size());
  const double w1 = (std::pow(n + 1.0, 1.0 / d) - 1.0) / 2.0;
  const double w2 = (n + 1.0) / 2.0;
  std::size_t best = candidates.size();
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (duplicates_any(design, candidates[i])) continue;
    const double score = w1 * min_dist_to(design, candidates[i]) +
                         w2 * min_gap_to(design, candidates[i]);
    if (score > best_score) {
      best_score = score;
      best = i;
    }
  }
  return best;
}

// Two-phase filter + argmax for the threshold variant; fixed alpha.
inline std::size_t mipt_reference(const PointSet& design,
                                  const PointSet& candidates, double alpha) {
  const double d_min = 2.0 * alpha / static_cast<double>(design.size());
  std::size_t best = candidates.size();
  double best_dist = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (duplicates_any(design, candidates[i])) continue;
    if (min_gap_to(design, candidates[i]) < d_min) continue;
    const double dist = min_dist_to(design, candidates[i]);
    if (dist > best_dist) {
      best_dist = dist;
      best = i;
    }
  }
  if (best != candidates.size()) return best;
  // fallback: best projected distance
  double best_gap = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (duplicates_any(design, candidates[i])) continue;
    const double gap = min_gap_to(design, candidates[i]);
    if (gap > best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  return best;
}

// Greedy quasi-LHS step evaluated literally: the occupied fraction of the
// union on the n+1 grid, then the intersite distance to the design.
inline std::size_t mqplhs_reference(const PointSet& design,
                                    const PointSet& candidates) {
  const std::size_t grid = design.size() + 1;
  double best_f = -1.0;
  std::vector<std::size_t> winners;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (duplicates_any(design, candidates[i])) continue;
    PointSet unioned = design;
    unioned.push_back(candidates[i]);
    const double f = lhs_fraction(unioned, grid);
    if (f > best_f) {
      best_f = f;
      winners.clear();
    }
    if (f == best_f) winners.push_back(i);
  }
  std::size_t best = winners.front();
  double best_dist = -std::numeric_limits<double>::infinity();
  for (std::size_t i : winners) {
    const double dist = min_dist_to(design, candidates[i]);
    if (dist > best_dist) {
      best_dist = dist;
      best = i;
    }
  }
  return best;
}

// Radical inverse rebuilt from the digit string, most significant first.
inline double radical_inverse_reference(std::uint64_t index,
                                        std::uint32_t base) {
  std::vector<std::uint64_t> digits;
  while (index > 0) {
    digits.push_back(index % base);
    index /= base;
  }
  double value = 0.0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    value = (value + static_cast<double>(*it)) / base;
  }
  return value;
}

}  // namespace oracle
