#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "doe/adaptive.hpp"
#include "doe/gp.hpp"
#include "doe/svr.hpp"
#include "doe/test_functions.hpp"

namespace doe {

/// Root mean square error between paired values.
double rmse(std::span<const double> truth, std::span<const double> predicted);

/// Fits the requested metamodel kind behind one interface.
class FittedModel {
 public:
  FittedModel(MetamodelKind kind, const TrainingSet& train,
              const GpConfig& gp_config = {},
              const SvrConfig& svr_config = {});
  double predict(std::span<const double> x) const;
  MetamodelKind kind() const { return kind_; }

 private:
  MetamodelKind kind_;
  std::variant<GpModel, SvrModel> model_;
};

/// k-fold cross-validated RMSE: shuffled partition into k near-equal folds,
/// each predicted by a model trained on the remaining folds; returns
/// sqrt(mean over folds of the fold's mean squared residual). k == n is
/// leave-one-out.
double cv_rmse(const TrainingSet& train, MetamodelKind kind,
               std::size_t folds = 10, std::uint64_t seed = 0);

struct CiEstimate {
  double mean = 0.0;
  double half_width = 0.0;
};

/// Student-t confidence interval on the mean; a single value gives
/// half-width 0.
CiEstimate aggregate_ci(std::span<const double> values, double level = 0.95);

/// Sampler selection for an experiment: the sf-LHS baseline or one of the
/// sequential methods.
struct SamplerChoice {
  bool baseline = false;  ///< fresh sf-LHS at every checkpoint
  AdaptiveSpec::Method method = AdaptiveSpec::Method::mipt;
  AlphaMode alpha;

  static SamplerChoice parse(std::string_view name);
  std::string name() const;
};

struct ExperimentConfig {
  std::string function = "zakharov2";
  std::size_t dim = 2;
  SamplerChoice sampler;
  MetamodelKind metamodel = MetamodelKind::gp;
  std::size_t initial_size = 10;
  std::size_t max_samples = 0;  ///< 0: use 10 * dim
  std::size_t repetitions = 30;
  std::size_t test_points = 0;  ///< 0: use 5000 * dim
  std::size_t stride = 10;      ///< baseline checkpoint step
  std::uint64_t seed = 0;
  std::size_t sf_pool = 0;      ///< sf-LHS pool; 0: 1000 * dim
  SvrConfig svr;                ///< C / epsilon / gamma overrides

  std::size_t resolved_max_samples() const;
  std::size_t resolved_test_points() const;
  void validate() const;
};

struct RmseRecord {
  std::size_t repetition;
  std::size_t n_samples;
  std::optional<double> rmse;  ///< absent when the metamodel fit failed
};

struct AggregateRow {
  std::size_t n_samples;
  double mean_rmse;
  double ci_low;
  double ci_high;
  std::size_t failures;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<RmseRecord> records;      // repetition-major, n ascending
  std::vector<AggregateRow> aggregates;  // n ascending
  std::vector<std::pair<std::string, std::string>> metadata;
};

/// Runs the full protocol: per repetition, build the initial space-filling
/// LHS, grow it with the chosen sequential sampler (or rebuild fresh sf-LHS
/// designs at checkpoints for the baseline), fit the metamodel at every
/// recorded size and score it against a fixed per-repetition uniform test
/// cloud. Repetitions run in parallel on independent seed sub-streams;
/// the result is byte-reproducible from (config, seed).
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Recomputes the per-n aggregates from the raw records.
std::vector<AggregateRow> aggregate_records(
    const std::vector<RmseRecord>& records);

void write_raw_csv(const ExperimentResult& result, std::ostream& out);
void write_aggregate_csv(const ExperimentResult& result, std::ostream& out);
void write_metadata(const ExperimentResult& result, std::ostream& out);

}  // namespace doe
