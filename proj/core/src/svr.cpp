#include "doe/svr.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace doe {

namespace {

Eigen::MatrixXd rbf_kernel_matrix(const DesignMatrix& inputs, double gamma) {
  const auto n = static_cast<Eigen::Index>(inputs.size());
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    k(i, i) = 1.0;
    const auto a = inputs.point(static_cast<std::size_t>(i));
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const auto b = inputs.point(static_cast<std::size_t>(j));
      double s = 0.0;
      for (std::size_t t = 0; t < a.size(); ++t) {
        const double diff = a[t] - b[t];
        s += diff * diff;
      }
      k(i, j) = std::exp(-gamma * s);
      k(j, i) = k(i, j);
    }
  }
  return k;
}

}  // namespace

SvrModel SvrModel::fit(const TrainingSet& train, const SvrConfig& config) {
  if (train.inputs.size() < 2) {
    throw FitError("svr fit needs at least two points");
  }
  SvrModel model;
  model.inputs_ = train.inputs;
  model.gamma_ = config.gamma > 0.0
                     ? config.gamma
                     : 1.0 / static_cast<double>(train.inputs.dim());
  model.standardizer_ = Standardizer::fit(train.responses);
  model.beta_.assign(train.inputs.size(), 0.0);
  if (model.standardizer_.sigma == 0.0) return model;  // constant responses

  const std::size_t n = train.inputs.size();
  const double c = config.c;
  const double eps = config.epsilon;
  const Eigen::MatrixXd k = rbf_kernel_matrix(train.inputs, model.gamma_);

  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = model.standardizer_.to_standard(train.responses[i]);
  }

  // Solve  max -1/2 b'Kb + y'b - eps*|b|_1,  sum(b) = 0,  |b_i| <= C
  // by pairwise updates on the maximal violating pair. f holds y - K*b.
  std::vector<double>& beta = model.beta_;
  std::vector<double> f = y;
  double objective = 0.0;
  if (config.record_objective) model.trace_.push_back(objective);

  // Marginal gain of raising b_i (valid while its sign does not change);
  // the mirrored value bounds the multiplier from above when lowering.
  const auto up_value = [&](std::size_t i) {
    return beta[i] >= 0.0 ? f[i] - eps : f[i] + eps;
  };
  const auto down_value = [&](std::size_t i) {
    return beta[i] > 0.0 ? f[i] - eps : f[i] + eps;
  };

  double violation = 0.0;
  std::size_t iter = 0;
  for (; iter < config.max_iterations; ++iter) {
    std::size_t up = n, down = n;
    double max_up = -std::numeric_limits<double>::infinity();
    double min_down = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (beta[i] < c) {
        const double u = up_value(i);
        if (u > max_up) {
          max_up = u;
          up = i;
        }
      }
      if (beta[i] > -c) {
        const double d = down_value(i);
        if (d < min_down) {
          min_down = d;
          down = i;
        }
      }
    }
    violation = max_up - min_down;
    if (violation <= config.kkt_tolerance || up == n || down == n) break;

    const std::size_t i = up;
    const std::size_t j = down;
    const double curvature =
        std::max(k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) +
                     k(static_cast<Eigen::Index>(j),
                       static_cast<Eigen::Index>(j)) -
                     2.0 * k(static_cast<Eigen::Index>(i),
                             static_cast<Eigen::Index>(j)),
                 1e-12);
    double step = violation / curvature;
    // box limits, then stop at the |b| kinks so the eps term stays linear
    step = std::min(step, c - beta[i]);
    step = std::min(step, beta[j] + c);
    if (beta[i] < 0.0) step = std::min(step, -beta[i]);
    if (beta[j] > 0.0) step = std::min(step, beta[j]);

    objective += step * violation - 0.5 * step * step * curvature;
    beta[i] += step;
    beta[j] -= step;
    for (std::size_t t = 0; t < n; ++t) {
      f[t] -= step * (k(static_cast<Eigen::Index>(t),
                        static_cast<Eigen::Index>(i)) -
                      k(static_cast<Eigen::Index>(t),
                        static_cast<Eigen::Index>(j)));
    }
    if (config.record_objective) model.trace_.push_back(objective);
  }
  if (violation > config.kkt_tolerance) {
    throw FitError("svr fit did not reach the KKT tolerance after " +
                       std::to_string(iter) + " iterations",
                   violation);
  }
  model.kkt_residual_ = std::max(0.0, violation);

  // Any bias between the two bounds satisfies the KKT system; take the
  // midpoint.
  double max_up = -std::numeric_limits<double>::infinity();
  double min_down = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    if (beta[i] < c) max_up = std::max(max_up, up_value(i));
    if (beta[i] > -c) min_down = std::min(min_down, down_value(i));
  }
  model.bias_ = 0.5 * (max_up + min_down);
  return model;
}

double SvrModel::predict(std::span<const double> x) const {
  if (x.size() != inputs_.dim()) {
    throw Error("svr predict: dimension mismatch");
  }
  if (constant()) return standardizer_.mean;
  double acc = bias_;
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    if (beta_[i] == 0.0) continue;
    const auto p = inputs_.point(i);
    double s = 0.0;
    for (std::size_t t = 0; t < x.size(); ++t) {
      const double diff = p[t] - x[t];
      s += diff * diff;
    }
    acc += beta_[i] * std::exp(-gamma_ * s);
  }
  return standardizer_.from_standard(acc);
}

}  // namespace doe
