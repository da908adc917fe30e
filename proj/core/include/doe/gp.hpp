#pragma once

#include <span>
#include <vector>

#include "doe/metamodel.hpp"

namespace doe {

/// Hyperparameter search grid for the rational quadratic kernel
///   k(r) = (1 + r^2 / (2 a l^2))^(-a)
/// on standardized responses (unit output scale). The defaults cover the
/// length scales relevant on [0,1]^d.
struct GpConfig {
  std::vector<double> length_scales = {0.05, 0.1, 0.2, 0.5, 1.0, 2.0};
  std::vector<double> mixture_exponents = {0.5, 1.0, 2.0, 5.0};
  double jitter_start = 1e-10;
  double jitter_max = 1e-4;
};

/// One evaluated grid point, kept for the argmax check and run metadata.
struct GpGridPoint {
  double length_scale;
  double mixture_exponent;
  double jitter;
  double log_marginal_likelihood;
};

/// Gaussian process regressor with a rational quadratic kernel. Responses
/// are standardized internally; hyperparameters maximize the log marginal
/// likelihood over the config grid. Prediction returns the posterior mean
/// in original response units.
class GpModel {
 public:
  static GpModel fit(const TrainingSet& train, const GpConfig& config = {});

  double predict(std::span<const double> x) const;

  double length_scale() const { return length_scale_; }
  double mixture_exponent() const { return mixture_exponent_; }
  double jitter() const { return jitter_; }
  double log_marginal_likelihood() const { return lml_; }
  bool constant() const { return standardizer_.sigma == 0.0; }
  const std::vector<GpGridPoint>& grid_evaluations() const { return grid_; }

 private:
  GpModel() = default;

  DesignMatrix inputs_;
  std::vector<double> weights_;  // K^-1 y in standardized units
  Standardizer standardizer_;
  double length_scale_ = 0.0;
  double mixture_exponent_ = 0.0;
  double jitter_ = 0.0;
  double lml_ = 0.0;
  std::vector<GpGridPoint> grid_;
};

}  // namespace doe
