#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "doe/design.hpp"
#include "doe/rng.hpp"

namespace doe {

/// Tolerance-parameter policy for MIPT.
struct AlphaMode {
  bool automatic = true;
  double value = 0.0;  ///< fixed alpha in [0,1]; ignored when automatic

  static AlphaMode autotuned() { return {true, 0.0}; }
  static AlphaMode fixed(double a);
};

/// Configuration for the sequential samplers. Candidate counts default to
/// the published rules (100*n candidates; 10*n_j slices) and are only
/// overridden for testing.
struct AdaptiveSpec {
  enum class Method { mip, mipt, fpplhs, mqplhs };

  Method method = Method::mipt;
  std::uint64_t seed = 0;
  std::size_t candidates_per_point = 0;   ///< 0: use 100 * n
  std::size_t slices_per_refinement = 0;  ///< 0: use 10 * n_j (FpPLHS)
  AlphaMode alpha;                        ///< MIPT only

  static AdaptiveSpec::Method parse_method(std::string_view name);
};

/// Candidate points packed row-major; the selectors below pick an index.
struct CandidateSet {
  std::size_t dim = 0;
  std::vector<double> coords;

  std::size_t count() const { return dim == 0 ? 0 : coords.size() / dim; }
  std::span<const double> point(std::size_t i) const {
    return {coords.data() + i * dim, dim};
  }
};

/// Winner of the intersite-projected objective
///   ((n+1)^(1/d) - 1)/2 * min intersite + (n+1)/2 * min projected,
/// ties broken by the lowest candidate index. Candidates that duplicate an
/// existing point are discarded before scoring.
std::size_t mip_select(const DesignMatrix& design,
                       const CandidateSet& candidates);

struct MiptSelection {
  std::size_t index = 0;
  double alpha = 0.0;
  double d_min = 0.0;
  bool fallback = false;  ///< no candidate met the threshold (fixed alpha)
};

/// Threshold variant: discards candidates whose projected distance to the
/// design falls below d_min = 2*alpha/n, then maximizes the intersite
/// distance among the survivors. With automatic alpha the threshold is set
/// from the candidate set (see auto_alpha) and a survivor always exists;
/// with fixed alpha an empty survivor set falls back to the candidate with
/// maximum projected distance and flags the event.
MiptSelection mipt_select(const DesignMatrix& design,
                          const CandidateSet& candidates,
                          const AlphaMode& alpha);

/// Automatic tolerance: alpha_max is recovered from the best projected
/// distance over the candidates (d_min = 2*alpha/n inverted) and alpha is
/// set to half of it, clamped to [0,1].
double auto_alpha(const DesignMatrix& design, const CandidateSet& candidates);

/// Greedy quasi-LHS step: maximizes the occupied-interval fraction of
/// design + candidate on the n+1 grid; among the tied maximizers picks the
/// candidate with the largest intersite distance to the design.
std::size_t mqplhs_select(const DesignMatrix& design,
                          const CandidateSet& candidates);

/// Draws `count` uniform candidates, discarding exact duplicates of design
/// points.
CandidateSet draw_candidates(const DesignMatrix& design, std::size_t count,
                             Rng& rng);

/// Uniform interface for the one-point-per-call samplers. `next` appends
/// nothing; the caller owns the design and appends the returned point.
class SequentialSampler {
 public:
  virtual ~SequentialSampler() = default;

  /// Proposes the next point for the given design (all points released so
  /// far, in release order).
  virtual std::vector<double> next(const DesignMatrix& design) = 0;

  /// True if the last MIPT call used the empty-survivor fallback.
  virtual bool last_step_was_fallback() const { return false; }

  static std::unique_ptr<SequentialSampler> make(const AdaptiveSpec& spec);
};

/// Fluttering progressive LHS. Starting from an LHS of n_0 points, each
/// refinement doubles the axis grid, builds LHS slices on the intervals not
/// yet covered, keeps the slice whose union with the design maximizes the
/// intersite distance, and releases its points one per call, most isolated
/// first (crowding distance against the design as it grows). The design is
/// an exact LHS again whenever the size reaches n_0 * 2^j.
class FpPlhsSampler : public SequentialSampler {
 public:
  FpPlhsSampler(std::uint64_t seed, std::size_t slices_per_refinement = 0);

  std::vector<double> next(const DesignMatrix& design) override;

  std::size_t level() const { return level_; }
  std::size_t pending_count() const { return pending_.size(); }

 private:
  void refine(const DesignMatrix& design);

  Rng rng_;
  std::size_t slices_override_;
  bool initialized_ = false;
  std::size_t base_size_ = 0;
  std::size_t level_ = 0;     // completed doublings
  std::size_t released_ = 0;  // points handed out so far (incl. base)
  std::vector<std::vector<double>> pending_;
};

}  // namespace doe
