#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aperiodica/types.hpp"

namespace aperiodica {

// Window W in internal space R^m. Membership is half-open: [a, b) for
// intervals, products of [lo, hi) for boxes, the open ball for balls, and for
// convex polygons only the edges whose outward normal points down (or
// exactly left) belong to W.
class Window {
 public:
  enum class Kind { Interval, Box, Polygon, Ball };

  static Window interval(double a, double b, bool regular = true);
  static Window box(Vec lo, Vec hi, bool regular = true);
  // Vertices counterclockwise; must form a simple convex polygon.
  static Window polygon(std::vector<Eigen::Vector2d> vertices, bool regular = true);
  static Window ball(int dim, double radius, bool regular = true);
  // Regular polygon with `sides` vertices on a circle of radius `circumradius`,
  // first vertex at angle `phase`.
  static Window regular_polygon(int sides, double circumradius, double phase, bool regular = true);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  bool regular() const { return regular_; }
  std::string kind_name() const;

  const Vec& lo() const { return lo_; }
  const Vec& hi() const { return hi_; }
  double radius() const { return radius_; }
  const std::vector<Eigen::Vector2d>& vertices() const { return vertices_; }

  bool contains(const Vec& y) const;
  std::pair<Vec, Vec> bounding_box() const;
  double volume() const;

  // Returns a copy translated by t (W + t).
  Window translated(const Vec& t) const;

 private:
  Window() = default;

  Kind kind_ = Kind::Interval;
  int dim_ = 1;
  bool regular_ = true;
  Vec lo_, hi_;       // interval / box
  double radius_ = 0;  // ball
  Vec center_;         // ball center (zero unless translated)
  std::vector<Eigen::Vector2d> vertices_;
};

// ∫_W exp(i k·y) dy, in closed form for intervals, boxes and polygons and by
// radial quadrature (relative error below 1e-8) for balls.
Complex window_fourier(const Window& w, const Vec& k);

// vol(W ∩ (W - shift)).
double overlap_volume(const Window& w, const Vec& shift);

// Area of the intersection of two convex polygons (counterclockwise).
double convex_intersection_area(const std::vector<Eigen::Vector2d>& a, const std::vector<Eigen::Vector2d>& b);
double polygon_area(const std::vector<Eigen::Vector2d>& v);

}  // namespace aperiodica
