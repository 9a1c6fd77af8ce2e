#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "aperiodica/pointset.hpp"

namespace testing {

using aperiodica::Mat;
using aperiodica::PointSet;
using aperiodica::Region;
using aperiodica::Vec;

inline const double kTau = 0.5 * (1.0 + std::sqrt(5.0));
inline const double kPi = 3.14159265358979323846;

inline Vec vec(std::initializer_list<double> v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

inline PointSet from_coords(const std::vector<double>& xs, double radius) {
  Mat m(1, static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) m(0, static_cast<Eigen::Index>(i)) = xs[i];
  return PointSet(m, Region::ball(1, radius));
}

// (a Z + shift) ∩ [-radius, radius].
inline PointSet lattice_1d(double radius, double shift = 0.0, double a = 1.0) {
  std::vector<double> xs;
  const long long k = static_cast<long long>(std::ceil(radius / a)) + 2;
  for (long long i = -k; i <= k; ++i) {
    const double x = a * static_cast<double>(i) + shift;
    if (std::abs(x) <= radius) xs.push_back(x);
  }
  return from_coords(xs, radius);
}

// a Z^2 inside the centered ball.
inline PointSet lattice_2d(double radius, double a = 1.0) {
  std::vector<double> xs;
  const long long k = static_cast<long long>(std::ceil(radius / a)) + 1;
  for (long long i = -k; i <= k; ++i)
    for (long long j = -k; j <= k; ++j) {
      const double x = a * static_cast<double>(i), y = a * static_cast<double>(j);
      if (x * x + y * y <= radius * radius) {
        xs.push_back(x);
        xs.push_back(y);
      }
    }
  Mat m = Eigen::Map<Mat>(xs.data(), 2, static_cast<Eigen::Index>(xs.size() / 2));
  return PointSet(m, Region::ball(2, radius));
}

// Fibonacci model set by brute force over (m, n):
// {m + n τ : m + n τ' in [-1, τ - 1)} ∩ [-radius, radius].
inline std::vector<double> fibonacci_brute(double radius) {
  const double tp = 1.0 - kTau;
  std::vector<double> out;
  const long long nmax = static_cast<long long>(radius) + 5;
  for (long long n = -nmax; n <= nmax; ++n) {
    for (long long m = -3 * nmax; m <= 3 * nmax; ++m) {
      const double x = static_cast<double>(m) + static_cast<double>(n) * kTau;
      const double y = static_cast<double>(m) + static_cast<double>(n) * tp;
      if (std::abs(x) <= radius && y >= -1.0 && y < kTau - 1.0) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// |Σ_{j=-M}^{M} e^{-iξj}| / (2S): geometric sum for Z ∩ [-S, S], M = floor(S).
inline double lattice_bt_oracle(double xi, double s) {
  const double m = std::floor(s);
  const double half = std::sin(0.5 * xi);
  const double num = std::abs(half) < 1e-15 ? 2.0 * m + 1.0 : std::sin((2.0 * m + 1.0) * 0.5 * xi) / half;
  return num / (2.0 * s);
}

}  // namespace testing
