#pragma once

#include <vector>

#include "doe/design.hpp"
#include "doe/rng.hpp"
#include "oracles.hpp"

namespace testutil {

inline doe::DesignMatrix to_design(const oracle::PointSet& pts) {
  doe::DesignMatrix design(pts.front().size());
  for (const auto& p : pts) design.append(p);
  return design;
}

inline oracle::PointSet to_points(const doe::DesignMatrix& design) {
  oracle::PointSet pts;
  pts.reserve(design.size());
  for (std::size_t i = 0; i < design.size(); ++i) {
    const auto p = design.point(i);
    pts.emplace_back(p.begin(), p.end());
  }
  return pts;
}

inline oracle::PointSet random_points(std::size_t n, std::size_t d,
                                      doe::Rng& rng) {
  oracle::PointSet pts(n, oracle::Point(d));
  for (auto& p : pts) {
    for (auto& x : p) x = rng.uniform();
  }
  return pts;
}

}  // namespace testutil
