#pragma once

#include <span>
#include <vector>

#include "doe/metamodel.hpp"

namespace doe {

/// epsilon-SVR settings. The tube width applies to standardized responses;
/// gamma == 0 selects the 1/d default.
struct SvrConfig {
  double c = 100.0;
  double epsilon = 0.01;
  double gamma = 0.0;
  double kkt_tolerance = 1e-3;
  std::size_t max_iterations = 200000;
  bool record_objective = false;  ///< keep the per-iteration dual objective
};

/// Support vector regressor with an RBF kernel, trained by sequential
/// pairwise optimization of the epsilon-insensitive dual (maximal violating
/// pair selection). Dual coefficients stay inside [-C, C] and the training
/// KKT residual is reported on the fitted model.
class SvrModel {
 public:
  static SvrModel fit(const TrainingSet& train, const SvrConfig& config = {});

  double predict(std::span<const double> x) const;

  double bias() const { return bias_; }
  double kkt_residual() const { return kkt_residual_; }
  double gamma() const { return gamma_; }
  std::span<const double> dual_coefficients() const { return beta_; }
  bool constant() const { return standardizer_.sigma == 0.0; }

  /// Dual objective after each pair update (only when record_objective).
  const std::vector<double>& objective_trace() const { return trace_; }

 private:
  SvrModel() = default;

  DesignMatrix inputs_;
  std::vector<double> beta_;  // alpha - alpha*, standardized units
  Standardizer standardizer_;
  double bias_ = 0.0;
  double gamma_ = 0.0;
  double kkt_residual_ = 0.0;
  std::vector<double> trace_;
};

}  // namespace doe
