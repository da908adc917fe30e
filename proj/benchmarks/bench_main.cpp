#include <benchmark/benchmark.h>

#include "doe/adaptive.hpp"
#include "doe/gp.hpp"
#include "doe/metrics.hpp"
#include "doe/oneshot.hpp"
#include "doe/sobol.hpp"
#include "doe/test_functions.hpp"

namespace {

void BM_Intersite(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const doe::DesignMatrix design = doe::random_lhs(n, 10, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(doe::intersite_distance(design));
  }
}
BENCHMARK(BM_Intersite)->Arg(50)->Arg(200);

void BM_RandomLhs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(doe::random_lhs(n, 10, seed++));
  }
}
BENCHMARK(BM_RandomLhs)->Arg(100);

void BM_SfLhsPool(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(doe::sf_lhs(50, 5, 3, 500));
  }
}
BENCHMARK(BM_SfLhsPool);

void BM_SobolPoint(benchmark::State& state) {
  doe::SobolSequence seq(30);
  std::vector<double> p(30);
  for (auto _ : state) {
    seq.next(p);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_SobolPoint);

void BM_MiptStep(benchmark::State& state) {
  const doe::DesignMatrix design = doe::sf_lhs(20, 5, 11, 100);
  doe::AdaptiveSpec spec;
  spec.method = doe::AdaptiveSpec::Method::mipt;
  spec.seed = 1;
  for (auto _ : state) {
    auto sampler = doe::SequentialSampler::make(spec);
    benchmark::DoNotOptimize(sampler->next(design));
  }
}
BENCHMARK(BM_MiptStep);

void BM_GpFit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const doe::DesignMatrix design = doe::sf_lhs(n, 2, 5, 50);
  const doe::TestFunction f = doe::make_test_function("zakharov2", 2);
  const doe::Bounds box = doe::domain_of(f);
  std::vector<double> y(design.size());
  std::vector<double> scaled(2);
  for (std::size_t i = 0; i < design.size(); ++i) {
    doe::scale_point_from_unit(design.point(i), box, scaled);
    y[i] = doe::evaluate(f, scaled);
  }
  const doe::TrainingSet train(design, y);
  for (auto _ : state) {
    benchmark::DoNotOptimize(doe::GpModel::fit(train));
  }
}
BENCHMARK(BM_GpFit)->Arg(20)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
