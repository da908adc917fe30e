#include <doctest.h>

#include <set>
#include <vector>

#include "doe/halton.hpp"
#include "doe/metrics.hpp"
#include "doe/sobol.hpp"
#include "oracles.hpp"

TEST_CASE("halton starts at (1/2, 1/3) after the origin skip") {
  doe::HaltonSequence seq(2);
  const auto p1 = seq.next();
  CHECK(p1[0] == doctest::Approx(1.0 / 2).epsilon(1e-15));
  CHECK(p1[1] == doctest::Approx(1.0 / 3).epsilon(1e-15));
  const auto p2 = seq.next();
  CHECK(p2[0] == doctest::Approx(1.0 / 4).epsilon(1e-15));
  CHECK(p2[1] == doctest::Approx(2.0 / 3).epsilon(1e-15));
  const auto p3 = seq.next();
  CHECK(p3[0] == doctest::Approx(3.0 / 4).epsilon(1e-15));
  CHECK(p3[1] == doctest::Approx(1.0 / 9).epsilon(1e-15));
}

TEST_CASE("radical inverse matches the digit-reversal oracle") {
  for (std::uint64_t i = 1; i <= 200; ++i) {
    for (std::uint32_t base : {2u, 3u, 5u, 11u}) {
      CHECK(doe::radical_inverse(i, base) ==
            doctest::Approx(oracle::radical_inverse_reference(i, base))
                .epsilon(1e-15));
    }
  }
}

TEST_CASE("halton coordinates stay strictly inside (0,1)") {
  doe::HaltonSequence seq(6);
  for (int i = 0; i < 500; ++i) {
    for (double x : seq.next()) {
      CHECK(x > 0.0);
      CHECK(x < 1.0);
    }
  }
}

TEST_CASE("halton resume matches a skipped fresh run") {
  doe::HaltonSequence fresh(3);
  for (int i = 0; i < 10; ++i) fresh.next();
  doe::HaltonSequence resumed(3, 11);
  for (int i = 0; i < 5; ++i) {
    CHECK(fresh.next() == resumed.next());
  }
}

TEST_CASE("sobol 1d emits the gray-code order 0.5, 0.75, 0.25") {
  doe::SobolSequence seq(1);
  CHECK(seq.next()[0] == 0.5);
  CHECK(seq.next()[0] == 0.75);
  CHECK(seq.next()[0] == 0.25);
  CHECK(seq.next()[0] == 0.375);
}

TEST_CASE("sobol d=5 matches the reference construction exactly") {
  // first eight points after the origin skip, from an independent
  // generator built on the same published direction numbers
  const std::vector<std::vector<double>> expected = {
      {0.5, 0.5, 0.5, 0.5, 0.5},
      {0.75, 0.25, 0.25, 0.25, 0.75},
      {0.25, 0.75, 0.75, 0.75, 0.25},
      {0.375, 0.375, 0.625, 0.875, 0.375},
      {0.875, 0.875, 0.125, 0.375, 0.875},
      {0.625, 0.125, 0.875, 0.625, 0.625},
      {0.125, 0.625, 0.375, 0.125, 0.125},
      {0.1875, 0.3125, 0.9375, 0.4375, 0.5625},
  };
  doe::SobolSequence seq(5);
  for (const auto& row : expected) {
    CHECK(seq.next() == row);
  }
}

TEST_CASE("sobol aligned blocks stratify every axis") {
  // Each aligned block of 2^m consecutive indices puts exactly one
  // projected coordinate into every dyadic interval of width 2^-m. The
  // first emitted block [1, 2^m] is checked together with the skipped
  // origin; the next block [2^m + 1, 2^(m+1)] stands on its own.
  const std::size_t d = 5;
  const std::size_t m = 4;
  const std::size_t block = 1u << m;

  doe::SobolSequence seq(d);
  std::vector<std::vector<double>> points;
  for (std::size_t i = 0; i < 2 * block; ++i) points.push_back(seq.next());

  for (std::size_t axis = 0; axis < d; ++axis) {
    std::set<std::size_t> first_block = {0};  // origin occupies interval 0
    for (std::size_t i = 0; i + 1 < block; ++i) {
      first_block.insert(static_cast<std::size_t>(points[i][axis] * block));
    }
    CHECK(first_block.size() == block);

    std::set<std::size_t> second_block;
    for (std::size_t i = block - 1; i < 2 * block - 1; ++i) {
      second_block.insert(static_cast<std::size_t>(points[i][axis] * block));
    }
    CHECK(second_block.size() == block);
  }
}

TEST_CASE("sobol is deterministic and supports state forking") {
  doe::SobolSequence a(8);
  doe::SobolSequence b(8);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  doe::SobolSequence fork = a;  // clone mid-stream
  CHECK(a.next() == fork.next());
}

TEST_CASE("sobol prefix property") {
  const doe::DesignMatrix short_run = doe::SobolSequence(3).take(10);
  const doe::DesignMatrix long_run = doe::SobolSequence(3).take(25);
  for (std::size_t i = 0; i < short_run.size(); ++i) {
    const auto a = short_run.point(i);
    const auto b = long_run.point(i);
    CHECK(std::vector<double>(a.begin(), a.end()) ==
          std::vector<double>(b.begin(), b.end()));
  }
}

TEST_CASE("sobol supports at least 30 dimensions, then errors") {
  CHECK(doe::SobolSequence::max_dimension() >= 30);
  doe::SobolSequence seq(30);
  const auto p = seq.next();
  CHECK(p.size() == 30);
  CHECK_THROWS_AS(doe::SobolSequence(doe::SobolSequence::max_dimension() + 1),
                  doe::UnsupportedDimensionError);
}

TEST_CASE("sobol fast-forward matches stepping") {
  doe::SobolSequence stepped(4);
  for (int i = 0; i < 37; ++i) stepped.next();
  doe::SobolSequence jumped(4, 38);
  for (int i = 0; i < 8; ++i) CHECK(stepped.next() == jumped.next());
}
