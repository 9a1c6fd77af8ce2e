#pragma once

#include <string>

#include "aperiodica/types.hpp"

namespace aperiodica {

// Compactly supported, nonnegative, unit-integral smoothing kernel on R^N,
// built as a product of identical 1D profiles of half-width `width`.
// Profiles have closed-form Fourier transforms and autocorrelations.
class SmoothingKernel {
 public:
  enum class Shape { Triangular, RaisedCosine };

  SmoothingKernel(Shape shape, double width);

  Shape shape() const { return shape_; }
  double width() const { return width_; }
  std::string shape_name() const;

  double value(const Vec& x) const;
  // ∫ φ(x) e^{-i ξ·x} dx (real: profiles are even).
  double fourier(const Vec& xi) const;
  // (φ * φ~)(z).
  double autocorrelation(const Vec& z) const;

  double value_1d(double x) const;
  double fourier_1d(double xi) const;
  double autocorrelation_1d(double z) const;

  // Smallest ξ beyond which the decay envelope of |φ^(ξ)|^2 (1D profile)
  // stays below `level`.
  double cutoff_frequency(double level) const;

 private:
  Shape shape_;
  double width_;
};

}  // namespace aperiodica
