#include "doe/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "doe/metrics.hpp"

namespace doe {

AlphaMode AlphaMode::fixed(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw Error("alpha must lie in [0,1]");
  return {false, a};
}

AdaptiveSpec::Method AdaptiveSpec::parse_method(std::string_view name) {
  if (name == "mip") return Method::mip;
  if (name == "mipt") return Method::mipt;
  if (name == "fpplhs") return Method::fpplhs;
  if (name == "mqplhs") return Method::mqplhs;
  throw Error("unknown adaptive method '" + std::string(name) + "'");
}

namespace {

bool duplicates_design(const DesignMatrix& design, std::span<const double> p) {
  for (std::size_t i = 0; i < design.size(); ++i) {
    const auto q = design.point(i);
    bool equal = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (q[k] != p[k]) {
        equal = false;
        break;
      }
    }
    if (equal) return true;
  }
  return false;
}

void require_candidates(const CandidateSet& candidates) {
  if (candidates.count() == 0) {
    throw Error("candidate set is empty after duplicate filtering");
  }
}

std::vector<double> projected_distances(const DesignMatrix& design,
                                        const CandidateSet& candidates) {
  std::vector<double> pd(candidates.count());
  for (std::size_t i = 0; i < pd.size(); ++i) {
    pd[i] = min_projected_to(design, candidates.point(i));
  }
  return pd;
}

}  // namespace

CandidateSet draw_candidates(const DesignMatrix& design, std::size_t count,
                             Rng& rng) {
  CandidateSet set;
  set.dim = design.dim();
  set.coords.reserve(count * set.dim);
  std::vector<double> p(set.dim);
  // A uniform draw collides with an existing point with probability zero;
  // the loop guard only protects against degenerate custom streams.
  std::size_t attempts = 0;
  while (set.count() < count) {
    for (auto& x : p) x = rng.uniform();
    if (!duplicates_design(design, p)) {
      set.coords.insert(set.coords.end(), p.begin(), p.end());
    } else if (++attempts > 100 * count) {
      throw Error("could not draw non-duplicate candidates");
    }
  }
  return set;
}

std::size_t mip_select(const DesignMatrix& design,
                       const CandidateSet& candidates) {
  if (design.size() == 0) throw Error("mip_select needs a non-empty design");
  require_candidates(candidates);
  const double n = static_cast<double>(design.size());
  const double d = static_cast<double>(design.dim());
  const double intersite_weight =
      (std::pow(n + 1.0, 1.0 / d) - 1.0) / 2.0;
  const double projected_weight = (n + 1.0) / 2.0;
  std::size_t best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.count(); ++i) {
    const auto c = candidates.point(i);
    const double score = intersite_weight * min_distance_to(design, c) +
                         projected_weight * min_projected_to(design, c);
    if (score > best_score) {
      best_score = score;
      best = i;
    }
  }
  return best;
}

double auto_alpha(const DesignMatrix& design, const CandidateSet& candidates) {
  require_candidates(candidates);
  double pd_max = 0.0;
  for (std::size_t i = 0; i < candidates.count(); ++i) {
    pd_max = std::max(pd_max, min_projected_to(design, candidates.point(i)));
  }
  const double n = static_cast<double>(design.size());
  const double alpha_max = n * pd_max / 2.0;  // d_min = 2*alpha/n inverted
  return std::min(1.0, alpha_max / 2.0);
}

MiptSelection mipt_select(const DesignMatrix& design,
                          const CandidateSet& candidates,
                          const AlphaMode& alpha_mode) {
  if (design.size() == 0) throw Error("mipt_select needs a non-empty design");
  require_candidates(candidates);
  MiptSelection sel;
  sel.alpha = alpha_mode.automatic ? auto_alpha(design, candidates)
                                   : alpha_mode.value;
  sel.d_min = 2.0 * sel.alpha / static_cast<double>(design.size());

  const std::vector<double> pd = projected_distances(design, candidates);
  std::size_t best = candidates.count();
  double best_intersite = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.count(); ++i) {
    if (pd[i] < sel.d_min) continue;
    const double dist = min_distance_to(design, candidates.point(i));
    if (dist > best_intersite) {
      best_intersite = dist;
      best = i;
    }
  }
  if (best == candidates.count()) {
    // Only reachable with a fixed alpha: fall back to the candidate with
    // the best projected distance so a campaign never aborts.
    sel.fallback = true;
    best = static_cast<std::size_t>(
        std::max_element(pd.begin(), pd.end()) - pd.begin());
  }
  sel.index = best;
  return sel;
}

std::size_t mqplhs_select(const DesignMatrix& design,
                          const CandidateSet& candidates) {
  if (design.size() == 0) throw Error("mqplhs_select needs a non-empty design");
  require_candidates(candidates);
  const std::size_t n = design.size();
  const std::size_t d = design.dim();
  const std::size_t grid = n + 1;  // intervals a design of size n+1 would use

  // Occupied intervals of the existing design on the n+1 grid. A candidate
  // raises the occupied count by the number of axes where its interval is
  // still free, which fully determines the union's lhs fraction.
  std::vector<char> occupied(grid * d, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      occupied[k * grid + interval_index(design.coord(i, k), grid)] = 1;
    }
  }

  std::size_t best_gain = 0;
  std::vector<std::size_t> winners;
  for (std::size_t i = 0; i < candidates.count(); ++i) {
    const auto c = candidates.point(i);
    std::size_t gain = 0;
    for (std::size_t k = 0; k < d; ++k) {
      gain += occupied[k * grid + interval_index(c[k], grid)] == 0;
    }
    if (gain > best_gain) {
      best_gain = gain;
      winners.clear();
    }
    if (gain == best_gain) winners.push_back(i);
  }

  std::size_t best = winners.front();
  double best_dist = -std::numeric_limits<double>::infinity();
  for (std::size_t i : winners) {
    const double dist = min_distance_to(design, candidates.point(i));
    if (dist > best_dist) {
      best_dist = dist;
      best = i;
    }
  }
  return best;
}

namespace {

std::size_t candidate_count(const AdaptiveSpec& spec, std::size_t n) {
  return spec.candidates_per_point > 0 ? spec.candidates_per_point : 100 * n;
}

class MipSampler : public SequentialSampler {
 public:
  explicit MipSampler(const AdaptiveSpec& spec)
      : spec_(spec), rng_(spec.seed) {}

  std::vector<double> next(const DesignMatrix& design) override {
    CandidateSet cands =
        draw_candidates(design, candidate_count(spec_, design.size()), rng_);
    const std::size_t pick = mip_select(design, cands);
    const auto p = cands.point(pick);
    return {p.begin(), p.end()};
  }

 private:
  AdaptiveSpec spec_;
  Rng rng_;
};

class MiptSampler : public SequentialSampler {
 public:
  explicit MiptSampler(const AdaptiveSpec& spec)
      : spec_(spec), rng_(spec.seed) {}

  std::vector<double> next(const DesignMatrix& design) override {
    CandidateSet cands =
        draw_candidates(design, candidate_count(spec_, design.size()), rng_);
    const MiptSelection sel = mipt_select(design, cands, spec_.alpha);
    fallback_ = sel.fallback;
    const auto p = cands.point(sel.index);
    return {p.begin(), p.end()};
  }

  bool last_step_was_fallback() const override { return fallback_; }

 private:
  AdaptiveSpec spec_;
  Rng rng_;
  bool fallback_ = false;
};

class MqPlhsSampler : public SequentialSampler {
 public:
  explicit MqPlhsSampler(const AdaptiveSpec& spec)
      : spec_(spec), rng_(spec.seed) {}

  std::vector<double> next(const DesignMatrix& design) override {
    CandidateSet cands =
        draw_candidates(design, candidate_count(spec_, design.size()), rng_);
    const std::size_t pick = mqplhs_select(design, cands);
    const auto p = cands.point(pick);
    return {p.begin(), p.end()};
  }

 private:
  AdaptiveSpec spec_;
  Rng rng_;
};

}  // namespace

std::unique_ptr<SequentialSampler> SequentialSampler::make(
    const AdaptiveSpec& spec) {
  switch (spec.method) {
    case AdaptiveSpec::Method::mip:
      return std::make_unique<MipSampler>(spec);
    case AdaptiveSpec::Method::mipt:
      return std::make_unique<MiptSampler>(spec);
    case AdaptiveSpec::Method::mqplhs:
      return std::make_unique<MqPlhsSampler>(spec);
    case AdaptiveSpec::Method::fpplhs:
      return std::make_unique<FpPlhsSampler>(spec.seed,
                                             spec.slices_per_refinement);
  }
  throw Error("unknown adaptive method");
}

// ---------------------------------------------------------------------------
// FpPLHS

FpPlhsSampler::FpPlhsSampler(std::uint64_t seed,
                             std::size_t slices_per_refinement)
    : rng_(seed), slices_override_(slices_per_refinement) {}

void FpPlhsSampler::refine(const DesignMatrix& design) {
  const std::size_t n = design.size();
  const std::size_t d = design.dim();
  const std::size_t grid = 2 * n;

  // Intervals already covered at the doubled resolution, per axis. An exact
  // LHS at resolution n leaves exactly n free intervals per axis.
  std::vector<std::vector<std::size_t>> free_intervals(d);
  std::vector<char> taken(grid);
  for (std::size_t k = 0; k < d; ++k) {
    std::fill(taken.begin(), taken.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      taken[interval_index(design.coord(i, k), grid)] = 1;
    }
    for (std::size_t q = 0; q < grid; ++q) {
      if (!taken[q]) free_intervals[k].push_back(q);
    }
    if (free_intervals[k].size() != n) {
      throw StateError(
          "design is not an exact Latin Hypercube at the current grid; "
          "axis " +
          std::to_string(k) + " has " +
          std::to_string(free_intervals[k].size()) + " free intervals, " +
          "expected " + std::to_string(n));
    }
  }

  const std::size_t raw_slices =
      slices_override_ > 0 ? slices_override_ : 10 * n;

  // A slice is an LHS on the free intervals: per axis a random bijection
  // between slice points and free intervals, uniform inside each interval.
  std::vector<std::vector<double>> slices(raw_slices);
  std::vector<std::size_t> perm(n);
  for (auto& slice : slices) {
    slice.resize(n * d);
    for (std::size_t k = 0; k < d; ++k) {
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      rng_.shuffle(perm);
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t q = free_intervals[k][perm[i]];
        slice[i * d + k] =
            (static_cast<double>(q) + rng_.uniform()) /
            static_cast<double>(grid);
      }
    }
  }

  // Pre-select the most space-filling slices by their own intersite
  // distance, then run the expensive union test on that shortlist only.
  std::vector<double> own_score(raw_slices);
  for (std::size_t s = 0; s < raw_slices; ++s) {
    const DesignMatrix tmp(d, slices[s]);
    own_score[s] = n >= 2 ? intersite_distance(tmp)
                          : std::numeric_limits<double>::infinity();
  }
  std::vector<std::size_t> order(raw_slices);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return own_score[a] > own_score[b];
                   });
  const std::size_t shortlist = std::max<std::size_t>(1, raw_slices / 10);

  std::size_t best = order[0];
  double best_union = -std::numeric_limits<double>::infinity();
  for (std::size_t rank = 0; rank < shortlist; ++rank) {
    const std::size_t s = order[rank];
    DesignMatrix unioned = design;
    for (std::size_t i = 0; i < n; ++i) {
      unioned.append({slices[s].data() + i * d, d});
    }
    const double score = intersite_distance(unioned);
    if (score > best_union ||
        (score == best_union && s < best)) {
      best_union = score;
      best = s;
    }
  }

  pending_.clear();
  pending_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    pending_.emplace_back(slices[best].begin() + i * d,
                          slices[best].begin() + (i + 1) * d);
  }
  ++level_;
}

std::vector<double> FpPlhsSampler::next(const DesignMatrix& design) {
  if (!initialized_) {
    if (design.size() == 0) {
      throw StateError("FpPLHS needs a non-empty base design");
    }
    if (lhs_fraction(design) != 1.0) {
      throw StateError("FpPLHS base design must be a Latin Hypercube");
    }
    base_size_ = design.size();
    released_ = design.size();
    initialized_ = true;
  } else if (design.size() != released_) {
    throw StateError("design has " + std::to_string(design.size()) +
                     " points but the sampler released " +
                     std::to_string(released_));
  }

  if (pending_.empty()) refine(design);

  // Release the most isolated pending point, re-ranked against the design
  // as it grows.
  std::size_t best = 0;
  double best_cdm = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pending_.size(); ++i) {
    const double cdm = crowding_distance(design, pending_[i]);
    if (cdm > best_cdm) {
      best_cdm = cdm;
      best = i;
    }
  }
  std::vector<double> point = std::move(pending_[best]);
  pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(best));
  ++released_;
  return point;
}

}  // namespace doe
