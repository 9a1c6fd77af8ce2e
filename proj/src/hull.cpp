#include <algorithm>
#include <cmath>

#include "aperiodica/hull.hpp"

namespace aperiodica {

namespace {

bool precedes(const PointSet& a, const PointSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int k = 0; k < a.dim(); ++k) {
      const double x = a.points()(k, static_cast<Eigen::Index>(i));
      const double y = b.points()(k, static_cast<Eigen::Index>(i));
      if (x != y) return x < y;
    }
  }
  return false;
}

class MetricSearch {
 public:
  MetricSearch(const PointSet& g, const PointSet& l, double tol) : g_(g), l_(l), tol_(tol) {
    const Vec origin = Vec::Zero(g.dim());
    auto near = g.grid().nearest(origin, std::numeric_limits<double>::infinity());
    if (near) anchor_ = g.point(near->first);
  }

  bool feasible(double eps) const {
    if (anchor_.size() == 0) return false;
    const double r = 1.0 / eps;
    if (anchor_.norm() > r - eps) return false;
    bool ok = false;
    l_.grid().for_each_within(anchor_, 2.0 * eps, [&](std::size_t j, double) {
      if (!ok && try_displacement(l_.point(j) - anchor_, eps, r)) ok = true;
    });
    return ok;
  }

 private:
  // Is there x with |x| <= eps, |x + d| <= eps and g = l - d on B_r(x)?
  bool try_displacement(const Vec& d, double eps, double r) const {
    const double reach = r + eps + tol_;
    std::vector<Vec> bad;
    const Vec origin = Vec::Zero(g_.dim());
    g_.grid().for_each_within(origin, reach, [&](std::size_t i, double) {
      const Vec x = g_.point(i);
      if (!l_.grid().find(x + d, tol_)) bad.push_back(x);
    });
    l_.grid().for_each_within(d, reach, [&](std::size_t j, double) {
      const Vec y = l_.point(j) - d;
      if (!g_.grid().find(y, tol_)) bad.push_back(y);
    });

    const double h = eps / 50.0;
    const Vec c = -0.5 * d;
    const int dim = g_.dim();
    const long long kmax = 51;
    std::vector<long long> k(static_cast<std::size_t>(dim), -kmax);
    while (true) {
      Vec x = c;
      for (int i = 0; i < dim; ++i) x[i] += static_cast<double>(k[static_cast<std::size_t>(i)]) * h;
      if (x.norm() <= eps && (x + d).norm() <= eps) {
        bool clean = true;
        for (const Vec& m : bad) {
          if ((m - x).norm() < r - tol_) {
            clean = false;
            break;
          }
        }
        if (clean) return true;
      }
      int i = 0;
      while (i < dim && ++k[static_cast<std::size_t>(i)] > kmax) k[static_cast<std::size_t>(i++)] = -kmax;
      if (i == dim) break;
    }
    return false;
  }

  const PointSet& g_;
  const PointSet& l_;
  double tol_;
  Vec anchor_;
};

}  // namespace

double hull_metric(const PointSet& p1, const PointSet& p2, double eps_grid) {
  const double cap = 1.0 / std::sqrt(2.0);
  if (p1.dim() != p2.dim()) throw Error("hull_metric: dimension mismatch");
  if (!(eps_grid > 0.0) || !(eps_grid < cap)) throw Error("hull_metric: eps_grid must lie in (0, 1/sqrt 2)");
  const double need = 1.0 / eps_grid + 2.0 * eps_grid;
  if (p1.region().origin_depth() < need || p2.region().origin_depth() < need)
    throw Error("hull_metric: sample too small for requested precision");

  const bool swap = precedes(p2, p1);
  const PointSet& a = swap ? p2 : p1;
  const PointSet& b = swap ? p1 : p2;
  auto q = [](const PointSet& p) { return p.size() < 2 ? 0.0 : p.quantum(); };
  const double tol = std::max({q(a), q(b), 1e-12});
  const MetricSearch search(a, b, tol);

  double lo = eps_grid;
  double hi = cap;
  if (search.feasible(lo)) return 0.5 * eps_grid;
  if (!search.feasible(hi)) return cap;
  while (hi - lo > eps_grid) {
    const double mid = 0.5 * (lo + hi);
    if (search.feasible(mid))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace aperiodica
