#include "aperiodica/region.hpp"

#include <cmath>
#include <sstream>

namespace aperiodica {

double ball_volume(int dim, double radius) {
  switch (dim) {
    case 1: return 2.0 * radius;
    case 2: return kPi * radius * radius;
    case 3: return 4.0 / 3.0 * kPi * radius * radius * radius;
    default: throw Error("ball_volume: dimension must be 1..3");
  }
}

Key to_key(const IVec& v) { return Key(v.data(), v.data() + v.size()); }

IVec from_key(const Key& k) {
  IVec v(static_cast<Eigen::Index>(k.size()));
  for (std::size_t i = 0; i < k.size(); ++i) v[static_cast<Eigen::Index>(i)] = k[i];
  return v;
}

Region Region::ball(int dim, double radius) { return ball(Vec::Zero(dim), radius); }

Region Region::ball(Vec center, double radius) {
  if (!(radius > 0.0)) throw Error("region: ball radius must be positive");
  Region r;
  r.shape = Shape::Ball;
  r.center = std::move(center);
  r.radius = radius;
  return r;
}

Region Region::box(Vec half_widths) {
  Vec c = Vec::Zero(half_widths.size());
  return box(std::move(c), std::move(half_widths));
}

Region Region::box(Vec center, Vec half_widths) {
  if (center.size() != half_widths.size()) throw Error("region: box center/half-width size mismatch");
  if ((half_widths.array() <= 0.0).any()) throw Error("region: box half-widths must be positive");
  Region r;
  r.shape = Shape::Box;
  r.center = std::move(center);
  r.half_widths = std::move(half_widths);
  return r;
}

double Region::depth(const Vec& x) const {
  if (shape == Shape::Ball) return radius - (x - center).norm();
  return (half_widths.array() - (x - center).array().abs()).minCoeff();
}

double Region::volume() const {
  if (shape == Shape::Ball) return ball_volume(dim(), radius);
  return (2.0 * half_widths.array()).prod();
}

std::string Region::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (shape == Shape::Ball) {
    os << "ball " << radius;
  } else {
    os << "box";
    for (auto h : half_widths) os << ' ' << h;
  }
  if (!center.isZero(0.0)) {
    os << " center";
    for (auto c : center) os << ' ' << c;
  }
  return os.str();
}

}  // namespace aperiodica
