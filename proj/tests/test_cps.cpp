#include <set>

#include "aperiodica/cps.hpp"
#include "aperiodica/window.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace aperiodica;
using testing::kTau;
using testing::vec;

namespace {

// Composite Simpson rule for a complex integrand.
template <class F>
Complex simpson(F&& f, double a, double b, int n = 2000) {
  const double h = (b - a) / n;
  Complex s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

// ∫_W e^{ik·y} dy over a region star-shaped about the origin with radial
// boundary rho(θ), by nested Simpson rules in polar coordinates.
template <class Rho>
Complex polar_oracle(Rho&& rho, const Vec& k) {
  return simpson(
      [&](double th) {
        const double c = std::cos(th), s = std::sin(th);
        return simpson([&](double r) { return r * std::polar(1.0, r * (k[0] * c + k[1] * s)); }, 0.0, rho(th), 200);
      },
      0.0, 2.0 * testing::kPi, 800);
}

}  // namespace

TEST_CASE("scheme construction errors and warnings") {
  Mat rep(2, 2);
  rep << 1.0, 1.0, 2.0, 2.0;
  CHECK_THROWS_WITH_AS(CutProjectScheme(1, 1, rep, Window::interval(0, 1)), doctest::Contains("singular basis"), Error);

  Mat bad(2, 2);
  bad << 1.0, 1.0, 0.0, 1.0;
  CHECK_THROWS_WITH_AS(CutProjectScheme(1, 1, bad, Window::interval(0, 1)),
                       doctest::Contains("injectivity witness failed for q = "), Error);

  CheckBounds no_inj;
  no_inj.eps_inj = 0.0;
  CutProjectScheme id(1, 1, Mat::Identity(2, 2), Window::interval(0, 1), no_inj);
  bool dense_warning = false;
  for (const auto& w : id.warnings()) dense_warning = dense_warning || w.find("not dense") != std::string::npos;
  CHECK(dense_warning);

  auto fib = builtin_scheme("fibonacci");
  CHECK(fib.warnings().empty());
  CHECK(fib.covolume() == doctest::Approx(std::sqrt(5.0)));
  CutProjectScheme thick(1, 1, fib.basis(), Window::interval(-1, 0.6, false));
  CHECK_FALSE(thick.warnings().empty());
  CHECK_THROWS_AS(builtin_scheme("penrose"), Error);
}

TEST_CASE("identity scheme with the unit window yields the integers") {
  CheckBounds no_inj;
  no_inj.eps_inj = 0.0;
  CutProjectScheme id(1, 1, Mat::Identity(2, 2), Window::interval(-0.5, 0.5), no_inj);
  auto p = model_set_points(id, 10.0);
  REQUIRE(p.size() == 21);
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(p.point(i)[0] == static_cast<double>(i) - 10.0);
}

TEST_CASE("star map") {
  auto fib = builtin_scheme("fibonacci");
  IVec q(2);
  q << 0, 1;
  auto [x, xs] = fib.star_map(q);
  CHECK(x[0] == doctest::Approx(kTau));
  CHECK(xs[0] == doctest::Approx(1.0 - kTau));
  auto [z, zs] = fib.star_map(IVec::Zero(2));
  CHECK(z[0] == 0.0);
  CHECK(zs[0] == 0.0);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> u(-1000, 1000);
  for (int i = 0; i < 50; ++i) {
    IVec a(2), b(2);
    a << u(rng), u(rng);
    b << u(rng), u(rng);
    auto [pa, ia] = fib.star_map(a);
    auto [pb, ib] = fib.star_map(b);
    auto [ps, is] = fib.star_map(a + b);
    CHECK(ps[0] == doctest::Approx(pa[0] + pb[0]));
    CHECK(is[0] == doctest::Approx(ia[0] + ib[0]));
  }
}

TEST_CASE("fibonacci model set: count, windows and brute-force agreement") {
  auto fib = builtin_scheme("fibonacci");
  auto p = model_set_points(fib, 50.0);
  CHECK(std::abs(static_cast<double>(p.size()) - fib.density() * 100.0) <= 2.0);
  CHECK(fib.density() == doctest::Approx(kTau / std::sqrt(5.0)));
  REQUIRE(p.has_labels());
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto [x, xs] = fib.star_map(p.label(i));
    CHECK(fib.window().contains(xs));
    CHECK(x[0] == doctest::Approx(p.point(i)[0]));
  }
  const auto brute = testing::fibonacci_brute(50.0);
  REQUIRE(brute.size() == p.size());
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(p.point(i)[0] == doctest::Approx(brute[i]));

  // Shrinking the window shrinks the set.
  auto small = model_set_points(fib.with_window(Window::interval(-0.8, 0.4)), 50.0);
  CHECK(small.size() < p.size());
  for (std::size_t i = 0; i < small.size(); ++i) CHECK(p.find(small.point(i)).has_value());
}

TEST_CASE("unit-length fibonacci window gives gaps tau and tau squared") {
  // Window [τ-2, τ-1): the example scheme of the JSON format.
  auto fib = builtin_scheme("fibonacci");
  auto p = model_set_points(fib.with_window(Window::interval(kTau - 2.0, kTau - 1.0)), 100.0);
  std::set<long long> gaps;
  for (std::size_t i = 1; i < p.size(); ++i) gaps.insert(std::llround((p.point(i)[0] - p.point(i - 1)[0]) * 1e6));
  CHECK(gaps == std::set<long long>{std::llround(kTau * 1e6), std::llround(kTau * kTau * 1e6)});
}

TEST_CASE("octagonal model set is invariant under rotation by pi/4") {
  auto oct = builtin_scheme("octagonal");
  auto p = model_set_points(oct, 25.0);
  CHECK(p.size() > 500);
  std::set<Key> labels;
  for (std::size_t i = 0; i < p.size(); ++i) labels.insert(to_key(p.label(i)));
  const Mat rot = (Mat(2, 2) << std::cos(kPi / 4), -std::sin(kPi / 4), std::sin(kPi / 4), std::cos(kPi / 4)).finished();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const IVec q = p.label(i);
    IVec r(4);
    r << -q[3], q[0], q[1], q[2];
    CHECK(labels.count(to_key(r)) == 1);
    auto [x, xs] = oct.star_map(r);
    CHECK((x - rot * p.point(i)).norm() < 1e-9);
  }
  const double area = oct.window().volume();
  CHECK(area == doctest::Approx(2.0 * (1.0 + std::sqrt(2.0))));
}

TEST_CASE("model sets: uniform discreteness, relative density and Meyer containment") {
  auto fib = builtin_scheme("fibonacci");
  for (double r : {50.0, 200.0, 800.0}) {
    auto p = model_set_points(fib, r);
    CHECK(p.min_distance() >= 1.0 - 1e-9);
    for (std::size_t i = 1; i < p.size(); ++i) CHECK(p.point(i)[0] - p.point(i - 1)[0] <= kTau + 1e-9);
  }
  auto p = model_set_points(fib, 80.0);
  for (std::size_t i = 0; i < p.size(); i += 7)
    for (std::size_t j = 0; j < p.size(); j += 5) {
      auto [x, xs] = fib.star_map(p.label(i) - p.label(j));
      CHECK(std::abs(xs[0]) < kTau);
    }
}

TEST_CASE("fourier module: phase invariant, ordering, monotonicity") {
  auto fib = builtin_scheme("fibonacci");
  auto m = fourier_module(fib, 20.0, 15.0);
  CHECK(m.dual_basis.isApprox(2.0 * kPi * fib.basis().inverse().transpose()));
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long long> u(-50, 50);
  for (const auto& e : m.elements) {
    CHECK(std::abs(e.k[0]) <= 20.0);
    CHECK(std::abs(e.k_star[0]) <= 15.0);
    for (int t = 0; t < 5; ++t) {
      IVec l(2);
      l << u(rng), u(rng);
      auto [x, xs] = fib.star_map(l);
      const double phase = e.k[0] * x[0] + e.k_star[0] * xs[0];
      CHECK(std::abs(std::remainder(phase, 2.0 * kPi)) < 1e-10 * (1.0 + std::abs(phase)));
    }
  }
  for (std::size_t i = 1; i < m.size(); ++i) CHECK(std::abs(m.elements[i - 1].k[0]) <= std::abs(m.elements[i].k[0]) + 1e-12);
  // The two smallest positive frequencies and their internal partners.
  std::vector<std::pair<double, double>> pos;
  for (const auto& e : m.elements)
    if (e.k[0] > 1e-9) pos.emplace_back(e.k[0], e.k_star[0]);
  REQUIRE(pos.size() >= 2);
  // k = 2π(b - a τ')/√5, k* = 2π(a τ - b)/√5 for q = (a, b). (-3, 2) has
  // the smaller k but |k*| = 19.3 > 15, so the first two are (2, -1), (-1, 1).
  const double s5 = std::sqrt(5.0), tp = 1.0 - kTau;
  CHECK(pos[0].first == doctest::Approx(2 * kPi * (-1.0 - 2.0 * tp) / s5));
  CHECK(pos[1].first == doctest::Approx(2 * kPi * (1.0 + tp) / s5));
  CHECK(pos[0].second == doctest::Approx(2 * kPi * (2.0 * kTau + 1.0) / s5));
  CHECK(pos[1].second == doctest::Approx(2 * kPi * (-kTau - 1.0) / s5));

  auto bigger = fourier_module(fib, 20.0, 30.0);
  std::set<Key> small_q, big_q;
  for (const auto& e : m.elements) small_q.insert(to_key(e.q));
  for (const auto& e : bigger.elements) big_q.insert(to_key(e.q));
  CHECK(std::includes(big_q.begin(), big_q.end(), small_q.begin(), small_q.end()));
}

TEST_CASE("fourier module of the integers through a decoupled block") {
  CheckBounds no_inj;
  no_inj.eps_inj = 0.0;
  CutProjectScheme id(1, 1, Mat::Identity(2, 2), Window::interval(-0.5, 0.5), no_inj);
  auto m = fourier_module(id, 13.0, 0.1);
  std::vector<double> ks;
  for (const auto& e : m.elements) ks.push_back(e.k[0]);
  std::sort(ks.begin(), ks.end());
  REQUIRE(ks.size() == 5);
  for (int j = -2; j <= 2; ++j) CHECK(ks[static_cast<std::size_t>(j + 2)] == doctest::Approx(2 * kPi * j));
}

TEST_CASE("window fourier transforms") {
  auto unit = Window::interval(0, 1);
  CHECK(std::abs(window_fourier(unit, vec({0.0})) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(window_fourier(unit, vec({2 * kPi}))) < 1e-14);
  for (double k : {0.3, 1.7, -4.2, 25.0}) {
    auto w = Window::interval(-0.4, 1.3);
    auto oracle = simpson([&](double y) { return std::polar(1.0, k * y); }, -0.4, 1.3);
    CHECK(std::abs(window_fourier(w, vec({k})) - oracle) < 1e-9);
  }

  // Unit square as a polygon against the product of interval factors.
  auto sq = Window::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  for (auto k : {vec({kPi, 0.0}), vec({1.3, -2.1}), vec({1e-7, 3.0}), vec({0.0, 0.0})}) {
    auto fx = window_fourier(unit, vec({k[0]}));
    auto fy = window_fourier(unit, vec({k[1]}));
    CHECK(std::abs(window_fourier(sq, k) - fx * fy) < 1e-12);
  }
  auto box = Window::box(vec({0, 0}), vec({1, 1}));
  CHECK(std::abs(window_fourier(box, vec({1.3, -2.1})) - window_fourier(sq, vec({1.3, -2.1}))) < 1e-12);

  // Regular octagon against polar quadrature.
  const double rc = 1.3;
  auto oct = Window::regular_polygon(8, rc, kPi / 8);
  auto rho = [&](double th) {
    const double ap = rc * std::cos(kPi / 8);
    const double rel = std::remainder(th, kPi / 4);
    return ap / std::cos(rel);
  };
  for (auto k : {vec({0.7, 0.2}), vec({3.0, -5.0}), vec({0.0, 0.0})})
    CHECK(std::abs(window_fourier(oct, k) - polar_oracle(rho, k)) < 1e-7);

  // Balls: closed forms in 2D and 3D.
  const double r = 0.9;
  for (double k : {0.01, 1.0, 7.5, 30.0}) {
    const double f2 = 2 * kPi * r * std::cyl_bessel_j(1.0, k * r) / k;
    CHECK(std::abs(window_fourier(Window::ball(2, r), vec({k * 0.6, k * 0.8})) - f2) <= 1e-8 * std::abs(f2) + 1e-12);
    const double f3 = 4 * kPi * (std::sin(k * r) - k * r * std::cos(k * r)) / (k * k * k);
    CHECK(std::abs(window_fourier(Window::ball(3, r), vec({0.0, k, 0.0})) - f3) <= 1e-8 * std::abs(f3) + 1e-12);
  }
}

TEST_CASE("window membership is half-open") {
  auto w = Window::interval(0, 1);
  CHECK(w.contains(vec({0.0})));
  CHECK_FALSE(w.contains(vec({1.0})));
  auto sq = Window::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(sq.contains(vec({0.5, 0.0})));
  CHECK_FALSE(sq.contains(vec({0.5, 1.0})));
  CHECK(sq.contains(vec({0.0, 0.5})));
  CHECK_FALSE(sq.contains(vec({1.0, 0.5})));
  CHECK_THROWS_AS(Window::polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Window::polygon({{0, 0}, {2, 0}, {1, 0.2}, {2, 2}, {0, 2}}), Error);
  CHECK_THROWS_AS(Window::interval(1, 0), Error);
}

TEST_CASE("overlap volumes") {
  auto w = Window::interval(-1, 0.5);
  CHECK(overlap_volume(w, vec({0.0})) == doctest::Approx(1.5));
  CHECK(overlap_volume(w, vec({0.4})) == doctest::Approx(1.1));
  CHECK(overlap_volume(w, vec({-2.0})) == 0.0);
  // Polygons against a fine grid count.
  auto oct = Window::regular_polygon(8, 1.0, 0.3);
  const Vec s = vec({0.35, -0.2});
  const int n = 1000;
  double count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec y = vec({-1.0 + 2.0 * (i + 0.5) / n, -1.0 + 2.0 * (j + 0.5) / n});
      if (oct.contains(y) && oct.contains(y + s)) count += 1;
    }
  CHECK(overlap_volume(oct, s) == doctest::Approx(count * 4.0 / (n * n)).epsilon(2e-3));
  // Disk lens against the circle-segment formula.
  const double r = 1.0, d = 0.7;
  const double lens = 2 * r * r * std::acos(d / (2 * r)) - 0.5 * d * std::sqrt(4 * r * r - d * d);
  CHECK(overlap_volume(Window::ball(2, r), vec({d, 0.0})) == doctest::Approx(lens));
  CHECK(convex_intersection_area({{0, 0}, {2, 0}, {2, 2}, {0, 2}}, {{1, 1}, {3, 1}, {3, 3}, {1, 3}}) ==
        doctest::Approx(1.0));
}
