#include "aperiodica/window.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace aperiodica {

namespace {

double cross(const Eigen::Vector2d& a, const Eigen::Vector2d& b) { return a.x() * b.y() - a.y() * b.x(); }

// Edge (a -> b) of a counterclockwise polygon belongs to the half-open set
// when its outward normal (dy, -dx) points down, or exactly left.
bool owns_edge(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  const Eigen::Vector2d e = b - a;
  const double nx = e.y();
  const double ny = -e.x();
  return ny < 0.0 || (ny == 0.0 && nx < 0.0);
}

double sinc(double x) { return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

// ∫_0^1 exp(i d t) dt, stable for small d.
Complex phi1(double d) {
  const double h = 0.5 * d;
  const double s = sinc(h);
  return {sinc(d), h * s * s};
}

// ∫ over the standard 2-simplex of exp(i (t0 a0 + t1 a1 + t2 a2)).
Complex simplex_exp(double a0, double a1, double a2) {
  std::array<double, 3> a{a0, a1, a2};
  std::sort(a.begin(), a.end());
  const double spread = a[2] - a[0];
  if (spread < 1e-3) {
    // exp(i mu) sum_n i^n h_n(delta) / (n+2)!, h_n the complete homogeneous
    // symmetric polynomial of the centered values.
    const double mu = (a[0] + a[1] + a[2]) / 3.0;
    const double d0 = a[0] - mu, d1 = a[1] - mu, d2 = a[2] - mu;
    Complex sum = 0.0;
    Complex ipow = 1.0;
    double fact = 2.0;  // (n+2)!
    for (int n = 0; n <= 8; ++n) {
      double h = 0.0;
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n - i; ++j) {
          h += std::pow(d0, i) * std::pow(d1, j) * std::pow(d2, n - i - j);
        }
      }
      sum += ipow * h / fact;
      ipow *= Complex(0.0, 1.0);
      fact *= static_cast<double>(n + 3);
    }
    return std::exp(Complex(0.0, mu)) * sum;
  }
  // Second divided difference of s -> -exp(i s), from stable first ones.
  const Complex d01 = std::exp(Complex(0.0, a[0])) * Complex(0.0, 1.0) * phi1(a[1] - a[0]);
  const Complex d12 = std::exp(Complex(0.0, a[1])) * Complex(0.0, 1.0) * phi1(a[2] - a[1]);
  return -(d12 - d01) / spread;
}

Complex interval_fourier(double a, double b, double k) {
  const double len = b - a;
  return std::exp(Complex(0.0, k * a)) * len * phi1(k * len);
}

// Composite Gauss-Legendre (8 nodes per panel) on [0, r].
template <class F>
double radial_quadrature(double r, double k, F&& f) {
  static constexpr std::array<double, 8> x{-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                           -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                           0.7966664774136267,  0.9602898564975363};
  static constexpr std::array<double, 8> w{0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                           0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                           0.2223810344533745, 0.1012285362903763};
  const int panels = std::max(4, static_cast<int>(std::ceil(std::abs(k) * r)));
  const double h = r / panels;
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (std::size_t j = 0; j < x.size(); ++j) acc += w[j] * 0.5 * h * f(mid + 0.5 * h * x[j]);
  }
  return acc;
}

std::vector<Eigen::Vector2d> clip(const std::vector<Eigen::Vector2d>& subject, const Eigen::Vector2d& a,
                                  const Eigen::Vector2d& b) {
  std::vector<Eigen::Vector2d> out;
  const Eigen::Vector2d e = b - a;
  auto side = [&](const Eigen::Vector2d& p) { return cross(e, p - a); };
  for (std::size_t i = 0; i < subject.size(); ++i) {
    const Eigen::Vector2d& p = subject[i];
    const Eigen::Vector2d& q = subject[(i + 1) % subject.size()];
    const double sp = side(p);
    const double sq = side(q);
    if (sp >= 0.0) out.push_back(p);
    if ((sp >= 0.0) != (sq >= 0.0)) out.push_back(p + (q - p) * (sp / (sp - sq)));
  }
  return out;
}

}  // namespace

Window Window::interval(double a, double b, bool regular) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) throw Error("window: interval needs finite a < b");
  Window w;
  w.kind_ = Kind::Interval;
  w.dim_ = 1;
  w.regular_ = regular;
  w.lo_ = Vec::Constant(1, a);
  w.hi_ = Vec::Constant(1, b);
  return w;
}

Window Window::box(Vec lo, Vec hi, bool regular) {
  if (lo.size() != hi.size() || lo.size() == 0) throw Error("window: box bounds size mismatch");
  if (!(lo.array() < hi.array()).all() || !lo.allFinite() || !hi.allFinite())
    throw Error("window: box needs finite lo < hi");
  Window w;
  w.kind_ = Kind::Box;
  w.dim_ = static_cast<int>(lo.size());
  w.regular_ = regular;
  w.lo_ = std::move(lo);
  w.hi_ = std::move(hi);
  return w;
}

Window Window::polygon(std::vector<Eigen::Vector2d> vertices, bool regular) {
  const std::size_t n = vertices.size();
  if (n < 3) throw Error("window: polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices[i];
    const auto& b = vertices[(i + 1) % n];
    const auto& c = vertices[(i + 2) % n];
    if (!(cross(b - a, c - b) > 0.0)) throw Error("window: polygon must be convex and counterclockwise");
  }
  // Convex turns everywhere plus a single winding means a simple polygon.
  double winding = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto e1 = vertices[(i + 1) % n] - vertices[i];
    const auto e2 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
    winding += std::atan2(cross(e1, e2), e1.dot(e2));
  }
  if (std::abs(winding - 2.0 * kPi) > 1e-6) throw Error("window: polygon is not simple");
  Window w;
  w.kind_ = Kind::Polygon;
  w.dim_ = 2;
  w.regular_ = regular;
  w.vertices_ = std::move(vertices);
  return w;
}

Window Window::ball(int dim, double radius, bool regular) {
  if (dim < 1 || dim > 3) throw Error("window: ball dimension must be 1..3");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw Error("window: ball radius must be positive");
  Window w;
  w.kind_ = Kind::Ball;
  w.dim_ = dim;
  w.regular_ = regular;
  w.radius_ = radius;
  w.center_ = Vec::Zero(dim);
  return w;
}

Window Window::regular_polygon(int sides, double circumradius, double phase, bool regular) {
  if (sides < 3) throw Error("window: regular polygon needs at least 3 sides");
  std::vector<Eigen::Vector2d> v;
  for (int j = 0; j < sides; ++j) {
    const double t = phase + 2.0 * kPi * j / sides;
    v.emplace_back(circumradius * std::cos(t), circumradius * std::sin(t));
  }
  return polygon(std::move(v), regular);
}

std::string Window::kind_name() const {
  switch (kind_) {
    case Kind::Interval: return "interval";
    case Kind::Box: return "box";
    case Kind::Polygon: return "polygon";
    case Kind::Ball: return "ball";
  }
  return "?";
}

bool Window::contains(const Vec& y) const {
  if (y.size() != dim_) throw Error("window: point dimension mismatch");
  switch (kind_) {
    case Kind::Interval:
    case Kind::Box:
      return (y.array() >= lo_.array()).all() && (y.array() < hi_.array()).all();
    case Kind::Ball:
      return (y - center_).squaredNorm() < radius_ * radius_;
    case Kind::Polygon: {
      const Eigen::Vector2d p(y[0], y[1]);
      const std::size_t n = vertices_.size();
      for (std::size_t i = 0; i < n; ++i) {
        const auto& a = vertices_[i];
        const auto& b = vertices_[(i + 1) % n];
        const double c = cross(b - a, p - a);
        if (c < 0.0) return false;
        if (c == 0.0 && !owns_edge(a, b)) return false;
      }
      return true;
    }
  }
  return false;
}

std::pair<Vec, Vec> Window::bounding_box() const {
  switch (kind_) {
    case Kind::Interval:
    case Kind::Box:
      return {lo_, hi_};
    case Kind::Ball:
      return {center_.array() - radius_, center_.array() + radius_};
    case Kind::Polygon: {
      Vec lo = Vec::Constant(2, vertices_[0].x());
      Vec hi = lo;
      lo[1] = hi[1] = vertices_[0].y();
      for (const auto& v : vertices_) {
        lo[0] = std::min(lo[0], v.x());
        lo[1] = std::min(lo[1], v.y());
        hi[0] = std::max(hi[0], v.x());
        hi[1] = std::max(hi[1], v.y());
      }
      return {lo, hi};
    }
  }
  return {};
}

double Window::volume() const {
  switch (kind_) {
    case Kind::Interval:
    case Kind::Box:
      return (hi_ - lo_).prod();
    case Kind::Ball:
      return ball_volume(dim_, radius_);
    case Kind::Polygon:
      return polygon_area(vertices_);
  }
  return 0.0;
}

Window Window::translated(const Vec& t) const {
  if (t.size() != dim_) throw Error("window: translation dimension mismatch");
  Window w = *this;
  switch (kind_) {
    case Kind::Interval:
    case Kind::Box:
      w.lo_ += t;
      w.hi_ += t;
      break;
    case Kind::Ball:
      w.center_ += t;
      break;
    case Kind::Polygon:
      for (auto& v : w.vertices_) v += Eigen::Vector2d(t[0], t[1]);
      break;
  }
  return w;
}

double polygon_area(const std::vector<Eigen::Vector2d>& v) {
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) a += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * a;
}

double convex_intersection_area(const std::vector<Eigen::Vector2d>& a, const std::vector<Eigen::Vector2d>& b) {
  std::vector<Eigen::Vector2d> poly = a;
  for (std::size_t i = 0; i < b.size() && !poly.empty(); ++i) poly = clip(poly, b[i], b[(i + 1) % b.size()]);
  if (poly.size() < 3) return 0.0;
  return std::max(0.0, polygon_area(poly));
}

Complex window_fourier(const Window& w, const Vec& k) {
  if (k.size() != w.dim()) throw Error("window_fourier: frequency dimension mismatch");
  switch (w.kind()) {
    case Window::Kind::Interval:
    case Window::Kind::Box: {
      Complex acc = 1.0;
      for (int i = 0; i < w.dim(); ++i) acc *= interval_fourier(w.lo()[i], w.hi()[i], k[i]);
      return acc;
    }
    case Window::Kind::Polygon: {
      const auto& v = w.vertices();
      Eigen::Vector2d c = Eigen::Vector2d::Zero();
      for (const auto& p : v) c += p;
      c /= static_cast<double>(v.size());
      const Eigen::Vector2d kk(k[0], k[1]);
      Complex acc = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        const double area2 = cross(a - c, b - c);
        acc += area2 * simplex_exp(kk.dot(c), kk.dot(a), kk.dot(b));
      }
      return acc;
    }
    case Window::Kind::Ball: {
      const Vec center = 0.5 * (w.bounding_box().first + w.bounding_box().second);
      const Complex phase = std::exp(Complex(0.0, k.dot(center)));
      const double r = w.radius();
      const double kn = k.norm();
      double value = 0.0;
      switch (w.dim()) {
        case 1:
          value = 2.0 * r * sinc(kn * r);
          break;
        case 2:
          value = radial_quadrature(r, kn, [&](double s) { return 2.0 * kPi * s * std::cyl_bessel_j(0.0, kn * s); });
          break;
        case 3:
          value = radial_quadrature(r, kn, [&](double s) { return 4.0 * kPi * s * s * sinc(kn * s); });
          break;
        default:
          throw Error("window_fourier: unsupported ball dimension");
      }
      return phase * value;
    }
  }
  return 0.0;
}

double overlap_volume(const Window& w, const Vec& shift) {
  if (shift.size() != w.dim()) throw Error("overlap_volume: shift dimension mismatch");
  switch (w.kind()) {
    case Window::Kind::Interval:
    case Window::Kind::Box: {
      double v = 1.0;
      for (int i = 0; i < w.dim(); ++i) v *= std::max(0.0, (w.hi()[i] - w.lo()[i]) - std::abs(shift[i]));
      return v;
    }
    case Window::Kind::Ball: {
      const double r = w.radius();
      const double d = shift.norm();
      if (d >= 2.0 * r) return 0.0;
      switch (w.dim()) {
        case 1: return 2.0 * r - d;
        case 2: return 2.0 * r * r * std::acos(d / (2.0 * r)) - 0.5 * d * std::sqrt(4.0 * r * r - d * d);
        case 3: return kPi * (4.0 * r + d) * (2.0 * r - d) * (2.0 * r - d) / 12.0;
        default: throw Error("overlap_volume: unsupported ball dimension");
      }
    }
    case Window::Kind::Polygon: {
      std::vector<Eigen::Vector2d> moved = w.vertices();
      for (auto& v : moved) v -= Eigen::Vector2d(shift[0], shift[1]);
      return convex_intersection_area(w.vertices(), moved);
    }
  }
  return 0.0;
}

}  // namespace aperiodica
