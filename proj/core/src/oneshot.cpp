#include "doe/oneshot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "doe/csv.hpp"
#include "doe/metrics.hpp"
#include "doe/rng.hpp"

namespace doe {

namespace {

void check_shape(std::size_t n, std::size_t d) {
  if (n == 0 || d == 0) throw Error("design size and dimension must be >= 1");
}

std::vector<double> lhs_coords(std::size_t n, std::size_t d, Rng& rng) {
  std::vector<double> coords(n * d);
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < d; ++k) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    rng.shuffle(perm);
    for (std::size_t i = 0; i < n; ++i) {
      coords[i * d + k] =
          (static_cast<double>(perm[i]) + rng.uniform()) /
          static_cast<double>(n);
    }
  }
  return coords;
}

// Minimum squared pairwise distance, abandoning the scan as soon as it can
// no longer beat `floor`. Returns -inf on early exit.
double min_sq_distance_above(const std::vector<double>& coords, std::size_t n,
                             std::size_t d, double floor) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = 0.0;
      const double* a = coords.data() + i * d;
      const double* b = coords.data() + j * d;
      for (std::size_t k = 0; k < d; ++k) {
        const double diff = a[k] - b[k];
        s += diff * diff;
      }
      if (s < best) {
        best = s;
        if (best < floor) return -std::numeric_limits<double>::infinity();
      }
    }
  }
  return best;
}

}  // namespace

DesignMatrix random_lhs(std::size_t n, std::size_t d, std::uint64_t seed) {
  check_shape(n, d);
  Rng rng(substream(seed, 0));  // identical to sf-LHS pool candidate 0
  return DesignMatrix(d, lhs_coords(n, d, rng));
}

DesignMatrix sf_lhs(std::size_t n, std::size_t d, std::uint64_t seed,
                    std::size_t pool) {
  check_shape(n, d);
  if (pool == 0) pool = 1000 * d;
  std::vector<double> best_coords;
  double best_sq = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pool; ++i) {
    Rng rng(substream(seed, i));
    std::vector<double> coords = lhs_coords(n, d, rng);
    if (n < 2) {
      if (best_coords.empty()) best_coords = std::move(coords);
      continue;
    }
    const double sq = min_sq_distance_above(coords, n, d, best_sq);
    if (sq > best_sq) {  // strict: ties keep the earlier candidate
      best_sq = sq;
      best_coords = std::move(coords);
    }
  }
  return DesignMatrix(d, std::move(best_coords));
}

DesignMatrix generate_oneshot(const OneShotSpec& spec) {
  switch (spec.method) {
    case OneShotSpec::Method::random_lhs:
      return random_lhs(spec.n, spec.d, spec.seed);
    case OneShotSpec::Method::sf_lhs:
      return sf_lhs(spec.n, spec.d, spec.seed, spec.pool);
    case OneShotSpec::Method::preoptimized_file:
      if (!spec.path) throw Error("preoptimized_file needs a path");
      return load_design(*spec.path);
  }
  throw Error("unknown one-shot method");
}

}  // namespace doe
