#include <doctest.h>

#include "doe/design.hpp"
#include "doe/rng.hpp"

using doe::Bounds;
using doe::DesignMatrix;

TEST_CASE("design rejects coordinates outside the unit cube") {
  CHECK_THROWS_AS(DesignMatrix(2, {0.5, 1.5}), doe::Error);
  CHECK_THROWS_AS(DesignMatrix(2, {-0.1, 0.5}), doe::Error);
  DesignMatrix d(2, {0.0, 1.0});  // closed boundaries are legal
  CHECK(d.size() == 1);
}

TEST_CASE("design append checks dimension") {
  DesignMatrix d(3);
  d.append(std::vector<double>{0.1, 0.2, 0.3});
  CHECK_THROWS_AS(d.append(std::vector<double>{0.1, 0.2}), doe::Error);
  CHECK(d.size() == 1);
}

TEST_CASE("duplicate points are legal and preserved in order") {
  DesignMatrix d(2, {0.5, 0.5, 0.5, 0.5, 0.1, 0.9});
  CHECK(d.size() == 3);
  CHECK(d.coord(2, 1) == 0.9);
}

TEST_CASE("bounds require lower < upper") {
  CHECK_THROWS_AS(Bounds({0.0, 1.0}, {1.0, 1.0}), doe::Error);
  const Bounds b = Bounds::cube(-5.0, 5.0, 3);
  CHECK(b.dim() == 3);
}

TEST_CASE("scaling maps bounds to the unit interval") {
  const Bounds b({-5.0}, {5.0});
  const DesignMatrix d = doe::scale_to_unit({0.0}, 1, b);
  CHECK(d.coord(0, 0) == doctest::Approx(0.5).epsilon(1e-15));

  const DesignMatrix ends = doe::scale_to_unit({-5.0, 5.0}, 1, b);
  CHECK(ends.coord(0, 0) == 0.0);
  CHECK(ends.coord(1, 0) == 1.0);

  const Bounds b2({-2.0}, {2.0});
  const DesignMatrix mid = doe::scale_to_unit({1.0}, 1, b2);
  CHECK(mid.coord(0, 0) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("scaling rejects out-of-bounds points and names the coordinate") {
  const Bounds b({0.0, 0.0}, {1.0, 2.0});
  try {
    doe::scale_to_unit({0.5, 2.5}, 2, b);
    FAIL("expected OutOfBoundsError");
  } catch (const doe::OutOfBoundsError& e) {
    CHECK(std::string(e.what()).find("coordinate 1") != std::string::npos);
  }
}

TEST_CASE("scale round-trip is the identity within 1e-12") {
  doe::Rng rng(99);
  const Bounds b({-7.0, 0.5, -1.0}, {3.0, 12.0, 1.0});
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> original(3);
    for (std::size_t k = 0; k < 3; ++k) {
      original[k] =
          b.lower[k] + rng.uniform() * (b.upper[k] - b.lower[k]);
    }
    const DesignMatrix unit = doe::scale_to_unit(original, 3, b);
    const std::vector<double> back = doe::scale_from_unit(unit, b);
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(back[k] == doctest::Approx(original[k]).epsilon(1e-12));
    }
  }
}
