#pragma once

#include "aperiodica/types.hpp"

namespace aperiodica {

// Sampling region of a finite point set: a ball (an interval in 1D) or an
// axis-aligned box, both with an explicit center.
struct Region {
  enum class Shape { Ball, Box };

  Shape shape = Shape::Ball;
  Vec center;
  double radius = 0.0;  // ball only
  Vec half_widths;      // box only

  static Region ball(int dim, double radius);
  static Region ball(Vec center, double radius);
  static Region box(Vec half_widths);
  static Region box(Vec center, Vec half_widths);

  int dim() const { return static_cast<int>(center.size()); }

  // Distance from x to the region boundary, positive inside.
  double depth(const Vec& x) const;
  bool contains(const Vec& x, double slack = 0.0) const { return depth(x) >= -slack; }
  // Radius of the largest ball centered at the origin that fits inside.
  double origin_depth() const { return depth(Vec::Zero(dim())); }
  double volume() const;
  std::string describe() const;
};

}  // namespace aperiodica
