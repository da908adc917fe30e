#include "doe/gp.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numbers>

namespace doe {

TrainingSet::TrainingSet(DesignMatrix in, std::vector<double> y)
    : inputs(std::move(in)), responses(std::move(y)) {
  if (inputs.size() != responses.size()) {
    throw Error("training set: input and response counts differ");
  }
  for (double v : responses) {
    if (!std::isfinite(v)) throw Error("training set: non-finite response");
  }
}

Standardizer Standardizer::fit(std::span<const double> y) {
  Standardizer s;
  for (double v : y) s.mean += v;
  s.mean /= static_cast<double>(y.size());
  double var = 0.0;
  for (double v : y) var += (v - s.mean) * (v - s.mean);
  var /= static_cast<double>(y.size());
  s.sigma = std::sqrt(var);
  if (s.sigma < 1e-12 * (1.0 + std::abs(s.mean))) s.sigma = 0.0;
  return s;
}

MetamodelKind parse_metamodel(std::string_view name) {
  if (name == "gp") return MetamodelKind::gp;
  if (name == "svr") return MetamodelKind::svr;
  throw Error("unknown metamodel '" + std::string(name) + "' (gp or svr)");
}

std::string to_string(MetamodelKind kind) {
  return kind == MetamodelKind::gp ? "gp" : "svr";
}

namespace {

double rq_kernel(double sq_dist, double length_scale, double exponent) {
  return std::pow(
      1.0 + sq_dist / (2.0 * exponent * length_scale * length_scale),
      -exponent);
}

Eigen::MatrixXd squared_distances(const DesignMatrix& inputs) {
  const auto n = static_cast<Eigen::Index>(inputs.size());
  Eigen::MatrixXd sq(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    sq(i, i) = 0.0;
    const auto a = inputs.point(static_cast<std::size_t>(i));
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const auto b = inputs.point(static_cast<std::size_t>(j));
      double s = 0.0;
      for (std::size_t k = 0; k < a.size(); ++k) {
        const double diff = a[k] - b[k];
        s += diff * diff;
      }
      sq(i, j) = s;
      sq(j, i) = s;
    }
  }
  return sq;
}

struct CholeskyFit {
  Eigen::LLT<Eigen::MatrixXd> llt;
  double jitter = 0.0;
  bool ok = false;
};

CholeskyFit factorize(const Eigen::MatrixXd& kernel, const GpConfig& config) {
  CholeskyFit fit;
  const auto n = kernel.rows();
  // escalate by decades; the epsilon headroom keeps accumulated rounding
  // from skipping the final decade
  for (double jitter = config.jitter_start;
       jitter <= config.jitter_max * (1.0 + 1e-9); jitter *= 10.0) {
    Eigen::MatrixXd k = kernel;
    k.diagonal().array() += jitter;
    fit.llt.compute(k);
    if (fit.llt.info() == Eigen::Success) {
      // Guard against a numerically semidefinite factorization slipping
      // through: all pivots must be positive.
      bool positive = true;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (!(fit.llt.matrixLLT()(i, i) > 0.0)) {
          positive = false;
          break;
        }
      }
      if (positive) {
        fit.jitter = jitter;
        fit.ok = true;
        return fit;
      }
    }
  }
  return fit;
}

}  // namespace

GpModel GpModel::fit(const TrainingSet& train, const GpConfig& config) {
  if (train.inputs.size() < 2) {
    throw FitError("gp fit needs at least two points");
  }
  GpModel model;
  model.inputs_ = train.inputs;
  model.standardizer_ = Standardizer::fit(train.responses);
  if (model.standardizer_.sigma == 0.0) {
    // Constant responses: the posterior mean is that constant everywhere.
    model.weights_.assign(train.inputs.size(), 0.0);
    model.lml_ = 0.0;
    return model;
  }

  const auto n = static_cast<Eigen::Index>(train.inputs.size());
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    y(i) = model.standardizer_.to_standard(
        train.responses[static_cast<std::size_t>(i)]);
  }

  const Eigen::MatrixXd sq = squared_distances(train.inputs);

  double best_lml = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_weights;
  bool any = false;
  for (double ell : config.length_scales) {
    for (double a : config.mixture_exponents) {
      Eigen::MatrixXd kernel =
          sq.unaryExpr([&](double s) { return rq_kernel(s, ell, a); });
      const CholeskyFit chol = factorize(kernel, config);
      if (!chol.ok) continue;
      const Eigen::VectorXd alpha = chol.llt.solve(y);
      double log_det = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        log_det += std::log(chol.llt.matrixLLT()(i, i));
      }
      const double lml = -0.5 * y.dot(alpha) - log_det -
                         0.5 * static_cast<double>(n) *
                             std::log(2.0 * std::numbers::pi);
      model.grid_.push_back({ell, a, chol.jitter, lml});
      if (lml > best_lml) {  // ties keep the earlier grid point
        best_lml = lml;
        best_weights = alpha;
        model.length_scale_ = ell;
        model.mixture_exponent_ = a;
        model.jitter_ = chol.jitter;
        any = true;
      }
    }
  }
  if (!any) {
    throw FitError("gp fit: covariance singular at maximum jitter for every "
                   "grid point");
  }
  model.lml_ = best_lml;
  model.weights_.assign(best_weights.data(), best_weights.data() + n);
  return model;
}

double GpModel::predict(std::span<const double> x) const {
  if (x.size() != inputs_.dim()) {
    throw Error("gp predict: dimension mismatch");
  }
  if (constant()) return standardizer_.mean;
  double acc = 0.0;
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    const auto p = inputs_.point(i);
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double diff = p[k] - x[k];
      s += diff * diff;
    }
    acc += rq_kernel(s, length_scale_, mixture_exponent_) * weights_[i];
  }
  return standardizer_.from_standard(acc);
}

}  // namespace doe
