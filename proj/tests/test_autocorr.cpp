#include "aperiodica/autocorr.hpp"
#include "aperiodica/cps.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace aperiodica;
using testing::kTau;
using testing::lattice_1d;
using testing::vec;

TEST_CASE("lattice autocorrelation") {
  auto z = lattice_1d(150.0);
  auto c = autocorr(z, 100.0, 5.0, Estimator::Anchored);
  REQUIRE(c.size() == 11);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(std::abs(c.weights[i] - 1.0) <= 1.0 / 100.0);
  CHECK(c.weights[5] == doctest::Approx(201.0 / 200.0));
  CHECK(c.normalization_volume == 200.0);

  auto pairs = autocorr(z, 100.0, 5.0, Estimator::PairsInBall);
  CHECK(pairs.weights[5] == doctest::Approx(201.0 / 200.0));
  CHECK(pairs.weights[6] == doctest::Approx(200.0 / 200.0));
}

TEST_CASE("single point and region checks") {
  auto one = testing::from_coords({0.0}, 2.0);
  auto c = autocorr(one, 1.0, 10.0, Estimator::PairsInBall);
  REQUIRE(c.size() == 1);
  CHECK(c.support[0][0] == 0.0);
  CHECK(c.weights[0] == doctest::Approx(0.5));
  CHECK_THROWS_WITH_AS(autocorr(lattice_1d(10.0), 8.0, 3.0, Estimator::Anchored), doctest::Contains("region too small"),
                       Error);
  CHECK_NOTHROW(autocorr(lattice_1d(10.0), 8.0, 3.0, Estimator::PairsInBall));
  CHECK(estimator_from_string(to_string(Estimator::PairsInBall)) == Estimator::PairsInBall);
  CHECK(estimator_from_string(to_string(Estimator::Anchored)) == Estimator::Anchored);
  CHECK_THROWS_AS(estimator_from_string("bogus"), Error);
}

TEST_CASE("anchored and pairs-in-ball differ by at most the boundary bound") {
  auto fib_s = builtin_scheme("fibonacci");
  auto fib = model_set_points(fib_s, 1010.0);
  const double n = 1000.0, s_max = 6.0;
  auto a = autocorr(fib, n, s_max, Estimator::Anchored);
  auto b = autocorr(fib, n, s_max, Estimator::PairsInBall);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.keys[i] == b.keys[i]);
    CHECK(std::abs(a.weights[i] - b.weights[i]) <= s_max / n * fib_s.density() + 1.0 / n);
  }
  // Weight at 0 is the number of points in B_n over its volume.
  std::size_t inside = 0;
  for (std::size_t i = 0; i < fib.size(); ++i) inside += std::abs(fib.point(i)[0]) <= n;
  CHECK(b.weight_at(vec({0.0}), 1e-9) == doctest::Approx(inside / (2 * n)));
}

TEST_CASE("convergence sequences") {
  auto z = lattice_1d(1100.0);
  auto seq = autocorr_convergence(z, {10.0, 100.0, 1000.0}, vec({1.0}));
  REQUIRE(seq.size() == 3);
  for (std::size_t i = 1; i < seq.size(); ++i)
    CHECK(std::abs(seq[i].c - 1.0) <= std::abs(seq[i - 1].c - 1.0) + 1e-12);
  for (const auto& pt : autocorr_convergence(z, {10.0, 100.0}, vec({0.5}))) CHECK(pt.c == 0.0);

  auto fib_s = builtin_scheme("fibonacci");
  auto fib = model_set_points(fib_s, 10010.0);
  auto fs = autocorr_convergence(fib, {1000.0, 3000.0, 10000.0}, vec({1.0}));
  IVec one(2);
  one << 1, 0;
  const double oracle = overlap_oracle(fib_s, one);
  CHECK(std::abs(fs.back().c - oracle) <= 1e-2);
  CHECK(std::abs(fs[1].c - fs[2].c) <= 1e-2);
}

TEST_CASE("overlap oracle") {
  auto fib = builtin_scheme("fibonacci");
  CHECK(overlap_oracle(fib, IVec::Zero(2)) == doctest::Approx(fib.density()));
  IVec q(2);
  q << 1, 0;  // z = 1, z* = 1: interval [-1, τ-1) overlaps its shift by τ - 1
  CHECK(overlap_oracle(fib, q) == doctest::Approx((kTau - 1.0) / std::sqrt(5.0)));
  q << 0, 3;  // z* = 3τ', |z*| > τ
  CHECK(overlap_oracle(fib, q) == 0.0);
}
