#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "doe/design.hpp"

namespace doe {

/// Description of a one-stage design generator.
struct OneShotSpec {
  enum class Method { random_lhs, sf_lhs, preoptimized_file };

  Method method = Method::random_lhs;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t pool = 0;  ///< sf-LHS candidate pool; 0 means 1000 * d
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> path;  ///< preoptimized_file only
};

/// Random Latin Hypercube: each axis gets one point per interval via a
/// uniform random permutation, position uniform within the interval.
/// Deterministic in (n, d, seed); lhs_fraction of the result is always 1.
DesignMatrix random_lhs(std::size_t n, std::size_t d, std::uint64_t seed);

/// Space-filling LHS: generates `pool` random LHS candidates and keeps the
/// one with the largest intersite distance (ties to the lowest candidate
/// index). Candidate i draws from sub-stream (seed, i), so enlarging the
/// pool re-uses the smaller pool's candidates and the best intersite
/// distance is monotone in pool size. pool == 0 selects the 1000 * d
/// default; pool == 1 reproduces random_lhs exactly.
DesignMatrix sf_lhs(std::size_t n, std::size_t d, std::uint64_t seed,
                    std::size_t pool = 0);

/// Builds the design described by `spec` (loads from file for
/// preoptimized_file).
DesignMatrix generate_oneshot(const OneShotSpec& spec);

}  // namespace doe
