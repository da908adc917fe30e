#include "doe/evaluation.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>

#include "doe/csv.hpp"
#include "doe/metrics.hpp"
#include "doe/oneshot.hpp"
#include "doe/parallel.hpp"

namespace doe {

double rmse(std::span<const double> truth, std::span<const double> predicted) {
  if (truth.size() != predicted.size() || truth.empty()) {
    throw Error("rmse: value lists must be non-empty and of equal length");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double r = truth[i] - predicted[i];
    sum += r * r;
  }
  return std::sqrt(sum / static_cast<double>(truth.size()));
}

FittedModel::FittedModel(MetamodelKind kind, const TrainingSet& train,
                         const GpConfig& gp_config,
                         const SvrConfig& svr_config)
    : kind_(kind),
      model_(kind == MetamodelKind::gp
                 ? std::variant<GpModel, SvrModel>(
                       GpModel::fit(train, gp_config))
                 : std::variant<GpModel, SvrModel>(
                       SvrModel::fit(train, svr_config))) {}

double FittedModel::predict(std::span<const double> x) const {
  return std::visit([&](const auto& m) { return m.predict(x); }, model_);
}

double cv_rmse(const TrainingSet& train, MetamodelKind kind, std::size_t folds,
               std::uint64_t seed) {
  const std::size_t n = train.inputs.size();
  if (folds < 2) throw Error("cv_rmse: need at least 2 folds");
  if (n < folds) throw Error("cv_rmse: fewer samples than folds");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  rng.shuffle(order);

  const std::size_t d = train.inputs.dim();
  double fold_mse_sum = 0.0;
  std::size_t start = 0;
  for (std::size_t fold = 0; fold < folds; ++fold) {
    // near-equal fold sizes: the first (n % folds) folds get one extra
    const std::size_t size = n / folds + (fold < n % folds ? 1 : 0);
    const std::size_t end = start + size;

    DesignMatrix train_inputs(d);
    std::vector<double> train_y;
    train_y.reserve(n - size);
    for (std::size_t r = 0; r < n; ++r) {
      if (r >= start && r < end) continue;
      train_inputs.append(train.inputs.point(order[r]));
      train_y.push_back(train.responses[order[r]]);
    }
    const FittedModel model(kind, TrainingSet(std::move(train_inputs),
                                              std::move(train_y)));
    double mse = 0.0;
    for (std::size_t r = start; r < end; ++r) {
      const double pred = model.predict(train.inputs.point(order[r]));
      const double res = train.responses[order[r]] - pred;
      mse += res * res;
    }
    fold_mse_sum += mse / static_cast<double>(size);
    start = end;
  }
  return std::sqrt(fold_mse_sum / static_cast<double>(folds));
}

CiEstimate aggregate_ci(std::span<const double> values, double level) {
  if (values.empty()) throw Error("aggregate_ci: no values");
  CiEstimate ci;
  for (double v : values) ci.mean += v;
  ci.mean /= static_cast<double>(values.size());
  if (values.size() == 1) return ci;
  double var = 0.0;
  for (double v : values) var += (v - ci.mean) * (v - ci.mean);
  var /= static_cast<double>(values.size() - 1);
  const double sd = std::sqrt(var);
  if (sd == 0.0) return ci;
  const boost::math::students_t_distribution<double> dist(
      static_cast<double>(values.size() - 1));
  const double t = boost::math::quantile(dist, 0.5 + level / 2.0);
  ci.half_width = t * sd / std::sqrt(static_cast<double>(values.size()));
  return ci;
}

SamplerChoice SamplerChoice::parse(std::string_view name) {
  SamplerChoice choice;
  if (name == "sflhs") {
    choice.baseline = true;
    return choice;
  }
  choice.method = AdaptiveSpec::parse_method(name);
  return choice;
}

std::string SamplerChoice::name() const {
  if (baseline) return "sflhs";
  switch (method) {
    case AdaptiveSpec::Method::mip: return "mip";
    case AdaptiveSpec::Method::mipt: return "mipt";
    case AdaptiveSpec::Method::fpplhs: return "fpplhs";
    case AdaptiveSpec::Method::mqplhs: return "mqplhs";
  }
  return "?";
}

std::size_t ExperimentConfig::resolved_max_samples() const {
  return max_samples > 0 ? max_samples : 10 * dim;
}

std::size_t ExperimentConfig::resolved_test_points() const {
  return test_points > 0 ? test_points : 5000 * dim;
}

void ExperimentConfig::validate() const {
  make_test_function(function, dim);  // checks the id / dimension rule
  if (initial_size == 0) throw ConfigError("initial_size must be >= 1");
  if (initial_size >= resolved_max_samples()) {
    throw ConfigError("initial_size must be below max_samples");
  }
  if (repetitions == 0) throw ConfigError("repetitions must be >= 1");
  if (stride == 0) throw ConfigError("stride must be >= 1");
}

namespace {

// Sub-stream tags inside one repetition.
constexpr std::uint64_t kTestCloudTag = 0;
constexpr std::uint64_t kInitialTag = 1;
constexpr std::uint64_t kSamplerTag = 2;
constexpr std::uint64_t kCheckpointTag = 3;

struct RepetitionOutput {
  std::vector<RmseRecord> records;
};

class TestCloud {
 public:
  TestCloud(const TestFunction& f, const Bounds& box, std::size_t count,
            std::uint64_t seed)
      : dim_(f.dim), points_(count * f.dim), truth_(count) {
    Rng rng(seed);
    std::vector<double> scaled(dim_);
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t k = 0; k < dim_; ++k) {
        points_[i * dim_ + k] = rng.uniform();
      }
      scale_point_from_unit({points_.data() + i * dim_, dim_}, box, scaled);
      truth_[i] = evaluate(f, scaled);
    }
  }

  std::optional<double> score(const MetamodelKind kind,
                              const TrainingSet& train,
                              const SvrConfig& svr_config) const {
    try {
      const FittedModel model(kind, train, {}, svr_config);
      std::vector<double> predicted(truth_.size());
      for (std::size_t i = 0; i < truth_.size(); ++i) {
        predicted[i] = model.predict({points_.data() + i * dim_, dim_});
      }
      return rmse(truth_, predicted);
    } catch (const FitError&) {
      return std::nullopt;
    }
  }

 private:
  std::size_t dim_;
  std::vector<double> points_;
  std::vector<double> truth_;
};

TrainingSet make_training_set(const DesignMatrix& design,
                              const TestFunction& f, const Bounds& box) {
  std::vector<double> y(design.size());
  std::vector<double> scaled(design.dim());
  for (std::size_t i = 0; i < design.size(); ++i) {
    scale_point_from_unit(design.point(i), box, scaled);
    y[i] = evaluate(f, scaled);
  }
  return TrainingSet(design, std::move(y));
}

RepetitionOutput run_repetition(const ExperimentConfig& config,
                                std::size_t repetition) {
  const TestFunction f = make_test_function(config.function, config.dim);
  const Bounds box = domain_of(f);
  const std::uint64_t rep_seed = substream(config.seed, repetition);
  const std::size_t max_n = config.resolved_max_samples();

  const TestCloud cloud(f, box, config.resolved_test_points(),
                        substream(rep_seed, kTestCloudTag));

  RepetitionOutput out;
  if (config.sampler.baseline) {
    std::size_t checkpoint = 0;
    for (std::size_t n = config.initial_size; n <= max_n;
         n += config.stride, ++checkpoint) {
      const DesignMatrix design =
          sf_lhs(n, config.dim, substream(rep_seed, kCheckpointTag + checkpoint),
                 config.sf_pool);
      out.records.push_back(
          {repetition, n,
           cloud.score(config.metamodel, make_training_set(design, f, box),
                       config.svr)});
    }
    return out;
  }

  DesignMatrix design = sf_lhs(config.initial_size, config.dim,
                               substream(rep_seed, kInitialTag),
                               config.sf_pool);
  AdaptiveSpec spec;
  spec.method = config.sampler.method;
  spec.alpha = config.sampler.alpha;
  spec.seed = substream(rep_seed, kSamplerTag);
  auto sampler = SequentialSampler::make(spec);

  out.records.push_back(
      {repetition, design.size(),
       cloud.score(config.metamodel, make_training_set(design, f, box),
                   config.svr)});
  while (design.size() < max_n) {
    design.append(sampler->next(design));
    out.records.push_back(
        {repetition, design.size(),
         cloud.score(config.metamodel, make_training_set(design, f, box),
                     config.svr)});
  }
  return out;
}

}  // namespace

std::vector<AggregateRow> aggregate_records(
    const std::vector<RmseRecord>& records) {
  std::map<std::size_t, std::vector<double>> by_n;
  std::map<std::size_t, std::size_t> failures;
  for (const auto& rec : records) {
    if (rec.rmse) {
      by_n[rec.n_samples].push_back(*rec.rmse);
    } else {
      ++failures[rec.n_samples];
      by_n.try_emplace(rec.n_samples);
    }
  }
  std::vector<AggregateRow> rows;
  rows.reserve(by_n.size());
  for (const auto& [n, values] : by_n) {
    AggregateRow row{};
    row.n_samples = n;
    row.failures = failures.count(n) ? failures[n] : 0;
    if (values.empty()) {
      row.mean_rmse = std::numeric_limits<double>::quiet_NaN();
      row.ci_low = row.mean_rmse;
      row.ci_high = row.mean_rmse;
    } else {
      const CiEstimate ci = aggregate_ci(values);
      row.mean_rmse = ci.mean;
      row.ci_low = ci.mean - ci.half_width;
      row.ci_high = ci.mean + ci.half_width;
    }
    rows.push_back(row);
  }
  return rows;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();

  std::vector<RepetitionOutput> outputs(config.repetitions);
  parallel_for(config.repetitions, [&](std::size_t r) {
    outputs[r] = run_repetition(config, r);
  });

  ExperimentResult result;
  result.config = config;
  for (const auto& rep : outputs) {
    result.records.insert(result.records.end(), rep.records.begin(),
                          rep.records.end());
  }
  result.aggregates = aggregate_records(result.records);

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  result.metadata = {
      {"function", config.function},
      {"dim", std::to_string(config.dim)},
      {"method", config.sampler.name()},
      {"metamodel", to_string(config.metamodel)},
      {"initial_size", std::to_string(config.initial_size)},
      {"max_samples", std::to_string(config.resolved_max_samples())},
      {"repetitions", std::to_string(config.repetitions)},
      {"test_points", std::to_string(config.resolved_test_points())},
      {"stride", std::to_string(config.stride)},
      {"seed", std::to_string(config.seed)},
      {"sf_pool",
       std::to_string(config.sf_pool > 0 ? config.sf_pool : 1000 * config.dim)},
      {"alpha", config.sampler.alpha.automatic
                    ? std::string("auto")
                    : format_double(config.sampler.alpha.value)},
      {"gp_length_scales", "0.05,0.1,0.2,0.5,1,2"},
      {"gp_mixture_exponents", "0.5,1,2,5"},
      {"svr_c", format_double(config.svr.c)},
      {"svr_epsilon", format_double(config.svr.epsilon)},
      {"svr_gamma", config.svr.gamma > 0.0 ? format_double(config.svr.gamma)
                                           : "1/d"},
      {"wall_time_ms", std::to_string(elapsed.count())},
  };
  return result;
}

void write_raw_csv(const ExperimentResult& result, std::ostream& out) {
  out << "method,function,dim,metamodel,repetition,n_samples,rmse\n";
  for (const auto& rec : result.records) {
    out << result.config.sampler.name() << ',' << result.config.function << ','
        << result.config.dim << ',' << to_string(result.config.metamodel)
        << ',' << rec.repetition << ',' << rec.n_samples << ',';
    if (rec.rmse) out << format_double(*rec.rmse);
    out << '\n';
  }
}

void write_aggregate_csv(const ExperimentResult& result, std::ostream& out) {
  out << "method,function,dim,metamodel,n_samples,mean_rmse,ci_low,ci_high,"
         "failures\n";
  for (const auto& row : result.aggregates) {
    out << result.config.sampler.name() << ',' << result.config.function << ','
        << result.config.dim << ',' << to_string(result.config.metamodel)
        << ',' << row.n_samples << ',' << format_double(row.mean_rmse) << ','
        << format_double(row.ci_low) << ',' << format_double(row.ci_high)
        << ',' << row.failures << '\n';
  }
}

void write_metadata(const ExperimentResult& result, std::ostream& out) {
  for (const auto& [key, value] : result.metadata) {
    out << key << " = " << value << '\n';
  }
}

}  // namespace doe
