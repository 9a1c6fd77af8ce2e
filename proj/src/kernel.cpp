#include "aperiodica/kernel.hpp"

#include <cmath>

namespace aperiodica {

namespace {
double sinc(double x) { return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }
}  // namespace

SmoothingKernel::SmoothingKernel(Shape shape, double width) : shape_(shape), width_(width) {
  if (!(width > 0.0) || !std::isfinite(width)) throw Error("kernel: width must be positive");
}

std::string SmoothingKernel::shape_name() const {
  return shape_ == Shape::Triangular ? "triangular" : "raised-cosine";
}

double SmoothingKernel::value_1d(double x) const {
  const double a = std::abs(x);
  if (a >= width_) return 0.0;
  if (shape_ == Shape::Triangular) return (1.0 - a / width_) / width_;
  return (1.0 + std::cos(kPi * x / width_)) / (2.0 * width_);
}

double SmoothingKernel::fourier_1d(double xi) const {
  const double u = xi * width_;
  if (shape_ == Shape::Triangular) {
    const double s = sinc(0.5 * u);
    return s * s;
  }
  // sinc(u) pi^2 / (pi^2 - u^2), with the removable point u = ±pi.
  const double d = kPi * kPi - u * u;
  if (std::abs(std::abs(u) - kPi) < 1e-6) return 0.5;
  return sinc(u) * kPi * kPi / d;
}

double SmoothingKernel::autocorrelation_1d(double z) const {
  const double w = width_;
  const double a = std::abs(z);
  if (a >= 2.0 * w) return 0.0;
  if (shape_ == Shape::Triangular) {
    // Cubic B-spline on knots -2w..2w.
    const double t = a / w;
    if (t <= 1.0) return (2.0 / 3.0 - t * t + 0.5 * t * t * t) / w;
    const double r = 2.0 - t;
    return r * r * r / (6.0 * w);
  }
  const double k = kPi / w;
  const double len = 2.0 * w - a;
  return (len * (1.0 + 0.5 * std::cos(k * a)) + 1.5 * std::sin(k * a) / k) / (4.0 * w * w);
}

double SmoothingKernel::value(const Vec& x) const {
  double v = 1.0;
  for (auto c : x) v *= value_1d(c);
  return v;
}

double SmoothingKernel::fourier(const Vec& xi) const {
  double v = 1.0;
  for (auto c : xi) v *= fourier_1d(c);
  return v;
}

double SmoothingKernel::autocorrelation(const Vec& z) const {
  double v = 1.0;
  for (auto c : z) v *= autocorrelation_1d(c);
  return v;
}

double SmoothingKernel::cutoff_frequency(double level) const {
  // Envelopes: triangular (2/u)^4, raised cosine (pi^2 / (u (u^2 - pi^2)))^2.
  if (shape_ == Shape::Triangular) return 2.0 / std::pow(level, 0.25) / width_;
  double lo = 2.0 * kPi;
  double hi = lo;
  auto env = [](double u) {
    const double e = kPi * kPi / (u * (u * u - kPi * kPi));
    return e * e;
  };
  while (env(hi) > level) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (env(mid) > level ? lo : hi) = mid;
  }
  return hi / width_;
}

}  // namespace aperiodica
