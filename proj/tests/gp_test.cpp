#include <doctest.h>

#include <cmath>

#include "doe/gp.hpp"
#include "doe/metamodel.hpp"
#include "doe/oneshot.hpp"
#include "doe/rng.hpp"
#include "doe/test_functions.hpp"
#include "test_helpers.hpp"

namespace {

doe::TrainingSet sphere_training(std::size_t n, std::uint64_t seed) {
  const doe::DesignMatrix design = doe::random_lhs(n, 2, seed);
  const doe::TestFunction f = doe::make_test_function("sphere", 2);
  const doe::Bounds box = doe::domain_of(f);
  std::vector<double> y(design.size());
  std::vector<double> scaled(2);
  for (std::size_t i = 0; i < design.size(); ++i) {
    doe::scale_point_from_unit(design.point(i), box, scaled);
    y[i] = doe::evaluate(f, scaled);
  }
  return doe::TrainingSet(design, y);
}

}  // namespace

TEST_CASE("constant responses predict the constant everywhere") {
  const doe::DesignMatrix design = doe::random_lhs(6, 2, 3);
  const doe::TrainingSet train(design, std::vector<double>(6, 4.25));
  const doe::GpModel model = doe::GpModel::fit(train);
  CHECK(model.constant());
  doe::Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const std::vector<double> x = {rng.uniform(), rng.uniform()};
    CHECK(model.predict(x) == doctest::Approx(4.25).epsilon(1e-6));
  }
}

TEST_CASE("gp nearly interpolates sphere samples") {
  const doe::TrainingSet train = sphere_training(5, 11);
  const doe::GpModel model = doe::GpModel::fit(train);
  for (std::size_t i = 0; i < train.inputs.size(); ++i) {
    CHECK(model.predict(train.inputs.point(i)) ==
          doctest::Approx(train.responses[i]).epsilon(1e-4));
  }
}

TEST_CASE("doubling responses doubles de-standardized predictions") {
  const doe::TrainingSet train = sphere_training(8, 13);
  std::vector<double> doubled = train.responses;
  for (auto& v : doubled) v *= 2.0;
  const doe::GpModel base = doe::GpModel::fit(train);
  const doe::GpModel scaled =
      doe::GpModel::fit(doe::TrainingSet(train.inputs, doubled));
  doe::Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const std::vector<double> x = {rng.uniform(), rng.uniform()};
    CHECK(scaled.predict(x) ==
          doctest::Approx(2.0 * base.predict(x)).epsilon(1e-9));
  }
}

TEST_CASE("prediction is continuous") {
  const doe::TrainingSet train = sphere_training(10, 17);
  const doe::GpModel model = doe::GpModel::fit(train);
  const std::vector<double> x = {0.4, 0.6};
  const double at_x = model.predict(x);
  double delta = 1e-3;
  double previous_gap = std::abs(
      model.predict(std::vector<double>{x[0] + delta, x[1]}) - at_x);
  for (int i = 0; i < 4; ++i) {
    delta /= 10.0;
    const double gap = std::abs(
        model.predict(std::vector<double>{x[0] + delta, x[1]}) - at_x);
    CHECK(gap < previous_gap + 1e-12);
    previous_gap = gap;
  }
  CHECK(previous_gap < 1e-5);
}

TEST_CASE("selected hyperparameters maximize the evaluated grid") {
  const doe::TrainingSet train = sphere_training(12, 19);
  const doe::GpModel model = doe::GpModel::fit(train);
  REQUIRE(!model.grid_evaluations().empty());
  for (const auto& point : model.grid_evaluations()) {
    CHECK(model.log_marginal_likelihood() >=
          point.log_marginal_likelihood - 1e-12);
  }
  CHECK(model.jitter() <= 1e-4);
}

TEST_CASE("row permutation leaves predictions unchanged") {
  const doe::TrainingSet train = sphere_training(9, 23);
  std::vector<std::size_t> order = {4, 2, 7, 0, 8, 1, 6, 3, 5};
  doe::DesignMatrix permuted_inputs(train.inputs.dim());
  std::vector<double> permuted_y;
  for (std::size_t i : order) {
    permuted_inputs.append(train.inputs.point(i));
    permuted_y.push_back(train.responses[i]);
  }
  const doe::GpModel a = doe::GpModel::fit(train);
  const doe::GpModel b =
      doe::GpModel::fit(doe::TrainingSet(permuted_inputs, permuted_y));
  doe::Rng rng(29);
  for (int i = 0; i < 20; ++i) {
    const std::vector<double> x = {rng.uniform(), rng.uniform()};
    CHECK(a.predict(x) == doctest::Approx(b.predict(x)).epsilon(1e-10));
  }
}

TEST_CASE("gp fit requires two points") {
  const doe::DesignMatrix one = doe::random_lhs(1, 2, 1);
  CHECK_THROWS_AS(
      doe::GpModel::fit(doe::TrainingSet(one, std::vector<double>{1.0})),
      doe::FitError);
}
