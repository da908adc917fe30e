#include <doctest.h>

#include <cmath>

#include "doe/rng.hpp"
#include "doe/svr.hpp"
#include "test_helpers.hpp"

TEST_CASE("constant responses predict the constant within epsilon") {
  const doe::DesignMatrix design(2, {0.1, 0.2, 0.5, 0.9, 0.8, 0.3});
  const doe::TrainingSet train(design, std::vector<double>(3, -2.5));
  const doe::SvrModel model = doe::SvrModel::fit(train);
  doe::Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const std::vector<double> x = {rng.uniform(), rng.uniform()};
    CHECK(model.predict(x) == doctest::Approx(-2.5).epsilon(1e-9));
  }
}

TEST_CASE("linear 1d data is fit within the tube plus slack") {
  doe::DesignMatrix inputs(1);
  std::vector<double> y;
  for (int i = 0; i < 10; ++i) {
    const double x = static_cast<double>(i) / 9.0;
    inputs.append(std::vector<double>{x});
    y.push_back(x);
  }
  const doe::TrainingSet train(inputs, y);
  doe::SvrConfig config;
  const doe::SvrModel model = doe::SvrModel::fit(train, config);

  // residuals measured in standardized units, where the tube lives
  const doe::Standardizer st = doe::Standardizer::fit(y);
  for (std::size_t i = 0; i < train.inputs.size(); ++i) {
    const double pred = st.to_standard(model.predict(train.inputs.point(i)));
    const double truth = st.to_standard(y[i]);
    CHECK(std::abs(pred - truth) <= config.epsilon + 0.05);
  }
}

TEST_CASE("dual coefficients respect the box constraint") {
  doe::Rng rng(3);
  const doe::DesignMatrix design =
      testutil::to_design(testutil::random_points(15, 2, rng));
  std::vector<double> y(design.size());
  for (std::size_t i = 0; i < design.size(); ++i) {
    y[i] = std::sin(6.0 * design.coord(i, 0)) + design.coord(i, 1);
  }
  doe::SvrConfig config;
  const doe::SvrModel model =
      doe::SvrModel::fit(doe::TrainingSet(design, y), config);
  for (double beta : model.dual_coefficients()) {
    CHECK(beta >= -config.c - 1e-12);
    CHECK(beta <= config.c + 1e-12);
  }
  CHECK(model.kkt_residual() <= config.kkt_tolerance);
}

TEST_CASE("dual objective is monotone non-decreasing") {
  doe::Rng rng(5);
  const doe::DesignMatrix design =
      testutil::to_design(testutil::random_points(12, 2, rng));
  std::vector<double> y(design.size());
  for (std::size_t i = 0; i < design.size(); ++i) {
    y[i] = design.coord(i, 0) * design.coord(i, 0) - design.coord(i, 1);
  }
  doe::SvrConfig config;
  config.record_objective = true;
  const doe::SvrModel model =
      doe::SvrModel::fit(doe::TrainingSet(design, y), config);
  const auto& trace = model.objective_trace();
  REQUIRE(trace.size() >= 2);
  for (std::size_t i = 1; i < trace.size(); ++i) {
    CHECK(trace[i] >= trace[i - 1] - 1e-12);
  }
}

TEST_CASE("row permutation leaves predictions unchanged") {
  doe::Rng rng(7);
  const doe::DesignMatrix design =
      testutil::to_design(testutil::random_points(10, 2, rng));
  std::vector<double> y(design.size());
  for (std::size_t i = 0; i < design.size(); ++i) {
    y[i] = design.coord(i, 0) + 2.0 * design.coord(i, 1);
  }
  std::vector<std::size_t> order = {9, 3, 0, 7, 5, 1, 8, 2, 6, 4};
  doe::DesignMatrix permuted(design.dim());
  std::vector<double> permuted_y;
  for (std::size_t i : order) {
    permuted.append(design.point(i));
    permuted_y.push_back(y[i]);
  }
  const doe::SvrModel a = doe::SvrModel::fit(doe::TrainingSet(design, y));
  const doe::SvrModel b =
      doe::SvrModel::fit(doe::TrainingSet(permuted, permuted_y));
  for (int i = 0; i < 20; ++i) {
    const std::vector<double> x = {rng.uniform(), rng.uniform()};
    CHECK(a.predict(x) == doctest::Approx(b.predict(x)).epsilon(1e-10));
  }
}

TEST_CASE("non-convergence raises a fit error carrying the residual") {
  doe::Rng rng(9);
  const doe::DesignMatrix design =
      testutil::to_design(testutil::random_points(20, 2, rng));
  std::vector<double> y(design.size());
  for (std::size_t i = 0; i < design.size(); ++i) y[i] = rng.uniform();
  doe::SvrConfig config;
  config.max_iterations = 1;  // force failure
  try {
    doe::SvrModel::fit(doe::TrainingSet(design, y), config);
    FAIL("expected FitError");
  } catch (const doe::FitError& e) {
    CHECK(e.residual() > 0.0);
  }
}
