#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "doe/adaptive.hpp"
#include "doe/config.hpp"
#include "doe/csv.hpp"
#include "doe/evaluation.hpp"
#include "doe/halton.hpp"
#include "doe/metrics.hpp"
#include "doe/oneshot.hpp"
#include "doe/sobol.hpp"

namespace {

namespace fs = std::filesystem;

/// Removes every file registered with track() unless release() was called,
/// so a failing run leaves no partial outputs behind.
class OutputGuard {
 public:
  ~OutputGuard() {
    if (released_) return;
    for (const auto& path : paths_) {
      std::error_code ec;
      fs::remove(path, ec);
    }
  }
  void track(const fs::path& path) { paths_.push_back(path); }
  void release() { released_ = true; }

 private:
  std::vector<fs::path> paths_;
  bool released_ = false;
};

std::uint64_t resolve_seed(const std::string& seed_flag) {
  if (seed_flag == "random") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  if (seed_flag.empty()) return doe::kDefaultSeed;
  return std::stoull(seed_flag);
}

void print_report(const doe::MetricReport& report) {
  const auto field = [](const std::optional<double>& v,
                        const char* undefined_reason) {
    return v ? doe::format_double(*v)
             : std::string("undefined (") + undefined_reason + ")";
  };
  std::cout << "intersite:    " << field(report.intersite, "needs >= 2 points")
            << "\n";
  std::cout << "projected:    " << field(report.projected, "needs >= 2 points")
            << "\n";
  std::cout << "phi_p:        "
            << field(report.phi_p, report.intersite && *report.intersite == 0.0
                                       ? "coincident points"
                                       : "needs >= 2 points")
            << "\n";
  std::cout << "lhs_fraction: " << doe::format_double(report.lhs_fraction)
            << "\n";
}

struct GenerateOptions {
  std::string method;
  std::size_t dim = 0;
  std::size_t n = 0;
  std::string seed_flag;
  std::string out;
  std::string trace;
  std::string initial;
  std::size_t init_size = 0;
  std::size_t pool = 0;
  std::string alpha = "auto";
  std::string input;  // preoptimized design file
};

doe::AlphaMode parse_alpha_flag(const std::string& flag) {
  if (flag == "auto") return doe::AlphaMode::autotuned();
  return doe::AlphaMode::fixed(std::stod(flag));
}

bool is_sequential(const std::string& method) {
  return method == "halton" || method == "sobol" || method == "mip" ||
         method == "mipt" || method == "fpplhs" || method == "mqplhs";
}

bool is_adaptive(const std::string& method) {
  return method == "mip" || method == "mipt" || method == "fpplhs" ||
         method == "mqplhs";
}

void append_trace_row(std::ostream& out, const doe::DesignMatrix& design) {
  const doe::MetricReport report = doe::compute_metric_report(design);
  out << design.size() << ',' << doe::format_double(*report.intersite) << ','
      << doe::format_double(*report.projected) << ','
      << doe::format_double(report.lhs_fraction) << '\n';
}

int cmd_generate(const GenerateOptions& opt) {
  const std::uint64_t seed = resolve_seed(opt.seed_flag);
  std::cout << "seed: " << seed << "\n";

  const fs::path out_path(opt.out);
  fs::path trace_path(opt.trace);
  if (trace_path.empty()) {
    trace_path = out_path;
    trace_path.replace_extension(".trace.csv");
  }

  OutputGuard guard;
  doe::DesignMatrix design;
  std::ofstream trace;
  const auto open_trace = [&] {
    trace.open(trace_path, std::ios::binary);
    if (!trace) throw doe::Error("cannot open " + trace_path.string());
    guard.track(trace_path);
    trace << "n,intersite,projected,lhs_fraction\n";
  };

  if (opt.method == "lhs" || opt.method == "sflhs") {
    if (opt.n == 0 || opt.dim == 0) {
      throw doe::Error("--n and --dim are required for " + opt.method);
    }
    design = opt.method == "lhs"
                 ? doe::random_lhs(opt.n, opt.dim, seed)
                 : doe::sf_lhs(opt.n, opt.dim, seed, opt.pool);
    open_trace();
    append_trace_row(trace, design);
  } else if (opt.method == "file") {
    if (opt.input.empty()) throw doe::Error("--in is required for file");
    design = doe::load_design(opt.input);
    open_trace();
    if (design.size() >= 2) append_trace_row(trace, design);
  } else if (opt.method == "halton" || opt.method == "sobol") {
    if (opt.n == 0 || opt.dim == 0) {
      throw doe::Error("--n and --dim are required for " + opt.method);
    }
    design = doe::DesignMatrix(opt.dim);
    open_trace();
    std::optional<doe::HaltonSequence> halton;
    std::optional<doe::SobolSequence> sobol;
    if (opt.method == "halton") halton.emplace(opt.dim);
    else sobol.emplace(opt.dim);
    for (std::size_t i = 0; i < opt.n; ++i) {
      design.append(halton ? halton->next() : sobol->next());
      if (design.size() >= 2) append_trace_row(trace, design);
    }
  } else if (is_adaptive(opt.method)) {
    if (!opt.initial.empty()) {
      design = doe::load_design(opt.initial);
    } else if (opt.init_size > 0) {
      if (opt.dim == 0) throw doe::Error("--dim is required with --init-size");
      design = doe::sf_lhs(opt.init_size, opt.dim, doe::substream(seed, 1));
    } else {
      throw doe::Error("adaptive methods need --initial or --init-size");
    }
    if (opt.n <= design.size()) {
      throw doe::Error("--n must exceed the initial design size (" +
                       std::to_string(design.size()) + ")");
    }
    doe::AdaptiveSpec spec;
    spec.method = doe::AdaptiveSpec::parse_method(opt.method);
    spec.seed = doe::substream(seed, 2);
    spec.alpha = parse_alpha_flag(opt.alpha);
    auto sampler = doe::SequentialSampler::make(spec);
    open_trace();
    while (design.size() < opt.n) {
      design.append(sampler->next(design));
      if (sampler->last_step_was_fallback()) {
        std::cout << "note: empty survivor set at n = " << design.size()
                  << "; fell back to the max-projected candidate\n";
      }
      append_trace_row(trace, design);
    }
  } else {
    throw doe::Error(
        "unknown method '" + opt.method +
        "' (lhs, sflhs, file, halton, sobol, mip, mipt, fpplhs, mqplhs)");
  }

  if (!trace.flush()) throw doe::Error("write failed: " + trace_path.string());
  guard.track(out_path);
  doe::save_design(design, out_path);
  guard.release();

  std::cout << "design: " << out_path.string() << " (" << design.size() << "x"
            << design.dim() << ")\n";
  std::cout << "trace:  " << trace_path.string() << "\n";
  print_report(doe::compute_metric_report(design));
  return 0;
}

int cmd_metrics(const std::string& input, int p) {
  const doe::DesignMatrix design = doe::load_design(input);
  std::cout << "points: " << design.size() << ", dim: " << design.dim()
            << "\n";
  print_report(doe::compute_metric_report(design, p));
  return 0;
}

int cmd_voronoi(const std::string& input, std::uint64_t probes,
                const std::string& seed_flag, const std::string& out) {
  const std::uint64_t seed = resolve_seed(seed_flag);
  std::cout << "seed: " << seed << "\n";
  const doe::DesignMatrix design = doe::load_design(input);
  const std::vector<double> areas =
      doe::voronoi_cell_areas(design, probes, seed);

  const double max_area = *std::max_element(areas.begin(), areas.end());
  const double min_area = *std::min_element(areas.begin(), areas.end());
  // Cells whose areas differ by less than the Monte Carlo resolution count
  // as equal; the all-equal case is defined as darkness 0 everywhere.
  const double noise = 4.0 / std::sqrt(static_cast<double>(probes));
  const double range = max_area - min_area;
  const bool degenerate = range <= noise;

  OutputGuard guard;
  std::ofstream file(out, std::ios::binary);
  if (!file) throw doe::Error("cannot open " + out);
  guard.track(out);
  const bool planar = design.dim() == 2;
  file << (planar ? "index,x,y,area,darkness\n" : "index,area,darkness\n");
  for (std::size_t i = 0; i < areas.size(); ++i) {
    const double darkness =
        degenerate ? 0.0 : (max_area - areas[i]) / range;
    file << i << ',';
    if (planar) {
      file << doe::format_double(design.coord(i, 0)) << ','
           << doe::format_double(design.coord(i, 1)) << ',';
    }
    file << doe::format_double(areas[i]) << ',' << doe::format_double(darkness)
         << '\n';
  }
  if (!file.flush()) throw doe::Error("write failed: " + out);
  guard.release();
  std::cout << "cells: " << out << " (" << areas.size() << " generators)\n";
  return 0;
}

struct BenchmarkOverrides {
  std::string seed_flag;
  std::string function;
  std::size_t dim = 0;
  std::string method;
  std::string metamodel;
};

int cmd_benchmark(const std::string& config_path, const std::string& prefix,
                  const BenchmarkOverrides& over) {
  doe::ExperimentConfig config = doe::load_experiment_config(config_path);
  if (!over.function.empty()) config.function = over.function;
  if (over.dim > 0) config.dim = over.dim;
  if (!over.method.empty()) {
    const doe::AlphaMode keep = config.sampler.alpha;
    config.sampler = doe::SamplerChoice::parse(over.method);
    config.sampler.alpha = keep;
  }
  if (!over.metamodel.empty()) {
    config.metamodel = doe::parse_metamodel(over.metamodel);
  }
  if (!over.seed_flag.empty()) config.seed = resolve_seed(over.seed_flag);
  config.validate();
  std::cout << "seed: " << config.seed << "\n";

  const doe::ExperimentResult result = doe::run_experiment(config);

  OutputGuard guard;
  const auto write_file = [&](const std::string& suffix, auto writer) {
    const fs::path path(prefix + suffix);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw doe::Error("cannot open " + path.string());
    guard.track(path);
    writer(result, file);
    if (!file.flush()) throw doe::Error("write failed: " + path.string());
    std::cout << "wrote " << path.string() << "\n";
  };
  write_file("_raw.csv", doe::write_raw_csv);
  write_file("_aggregate.csv", doe::write_aggregate_csv);
  write_file("_meta.txt", doe::write_metadata);
  guard.release();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exploration-oriented sampling toolkit: one-shot and "
               "sequential designs, design metrics, surrogate benchmarks"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand(
      "generate", "Generate a design and its per-iteration metric trace");
  generate->add_option("--method", gen.method,
                       "lhs, sflhs, file, halton, sobol, mip, mipt, fpplhs, "
                       "mqplhs")
      ->required();
  generate->add_option("--dim", gen.dim, "dimension d");
  generate->add_option("--n", gen.n, "number of points (total)");
  generate->add_option("--seed", gen.seed_flag, "integer seed or 'random'");
  generate->add_option("--out", gen.out, "output design CSV")->required();
  generate->add_option("--trace", gen.trace,
                       "metrics trace CSV (default: <out>.trace.csv)");
  generate->add_option("--initial", gen.initial,
                       "initial design CSV (adaptive methods)");
  generate->add_option("--init-size", gen.init_size,
                       "build an sf-LHS of this size as the initial design");
  generate->add_option("--pool", gen.pool, "sf-LHS pool size (default 1000*d)");
  generate->add_option("--alpha", gen.alpha,
                       "MIPT tolerance: 'auto' or a value in [0,1]");
  generate->add_option("--in", gen.input, "design file to load (method file)");

  std::string metrics_in;
  int metrics_p = 2;
  auto* metrics =
      app.add_subcommand("metrics", "Report design-quality criteria");
  metrics->add_option("--in", metrics_in, "design CSV")->required();
  metrics->add_option("--p", metrics_p, "phi_p power (default 2)");

  std::string vor_in, vor_out, vor_seed;
  std::uint64_t vor_probes = 1000000;
  auto* voronoi = app.add_subcommand(
      "voronoi", "Monte Carlo Voronoi cell areas of a design");
  voronoi->add_option("--in", vor_in, "design CSV")->required();
  voronoi->add_option("--probes", vor_probes, "Monte Carlo probes");
  voronoi->add_option("--seed", vor_seed, "integer seed or 'random'");
  voronoi->add_option("--out", vor_out, "output cell CSV")->required();

  std::string bench_config, bench_prefix;
  BenchmarkOverrides bench_over;
  auto* benchmark = app.add_subcommand(
      "benchmark", "Run an RMSE-vs-sample-size experiment from a config file");
  benchmark->add_option("--config", bench_config, "key = value config file")
      ->required();
  benchmark->add_option("--out", bench_prefix, "output prefix")->required();
  benchmark->add_option("--seed", bench_over.seed_flag,
                        "override the config seed ('random' allowed)");
  benchmark->add_option("--function", bench_over.function,
                        "override the config function id");
  benchmark->add_option("--dim", bench_over.dim, "override the dimension");
  benchmark->add_option("--method", bench_over.method,
                        "override the sampling method");
  benchmark->add_option("--metamodel", bench_over.metamodel,
                        "override the metamodel (gp or svr)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return cmd_generate(gen);
    if (*metrics) return cmd_metrics(metrics_in, metrics_p);
    if (*voronoi) return cmd_voronoi(vor_in, vor_probes, vor_seed, vor_out);
    if (*benchmark) return cmd_benchmark(bench_config, bench_prefix, bench_over);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
