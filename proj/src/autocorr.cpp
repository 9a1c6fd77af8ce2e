#include "aperiodica/autocorr.hpp"

#include <algorithm>
#include <map>

namespace aperiodica {

std::string to_string(Estimator e) { return e == Estimator::Anchored ? "anchored" : "pairs-in-ball"; }

Estimator estimator_from_string(const std::string& s) {
  if (s == "anchored") return Estimator::Anchored;
  if (s == "pairs-in-ball") return Estimator::PairsInBall;
  throw Error("autocorr: unknown estimator '" + s + "'");
}

double WeightedComb::weight_at(const Vec& z, double tol) const {
  for (std::size_t i = 0; i < support.size(); ++i)
    if ((support[i] - z).norm() <= tol) return weights[i];
  return 0.0;
}

namespace {

void check_room(const PointSet& p, double n, double s_max, Estimator e, const char* op) {
  if (!(n > 0.0)) throw Error(std::string(op) + ": n must be positive");
  const double need = e == Estimator::Anchored ? n + s_max : n;
  if (p.region().origin_depth() < need) throw Error(std::string(op) + ": region too small");
}

}  // namespace

WeightedComb autocorr(const PointSet& p, double n, double s_max, Estimator estimator) {
  if (!(s_max >= 0.0)) throw Error("autocorr: s_max must be nonnegative");
  check_room(p, n, s_max, estimator, "autocorr");
  WeightedComb out;
  out.n = n;
  out.estimator = estimator;
  out.exact = p.has_labels();
  out.normalization_volume = ball_volume(p.dim(), n);
  const double q = p.quantum();
  const double n2 = n * n;

  std::map<Key, std::pair<Vec, std::size_t>> classes;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vec x = p.point(i);
    if (x.squaredNorm() > n2) continue;
    p.grid().for_each_within(x, s_max, [&](std::size_t j, double) {
      const Vec y = p.point(j);
      if (estimator == Estimator::PairsInBall && y.squaredNorm() > n2) return;
      // Anchored counts x with x + z present, so z = y - x; pairs count x - y
      // for both orders, which is the same multiset.
      Vec z = y - x;
      Key key = out.exact ? to_key(p.label(j) - p.label(i)) : quantize(z, q);
      auto [it, inserted] = classes.try_emplace(std::move(key), std::move(z), 0);
      ++it->second.second;
    });
  }
  std::vector<std::pair<Key, std::pair<Vec, std::size_t>>> items(classes.begin(), classes.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    const Vec& u = a.second.first;
    const Vec& v = b.second.first;
    for (Eigen::Index k = 0; k < u.size(); ++k)
      if (u[k] != v[k]) return u[k] < v[k];
    return false;
  });
  for (auto& [key, val] : items) {
    out.keys.push_back(key);
    out.support.push_back(val.first);
    out.weights.push_back(static_cast<double>(val.second) / out.normalization_volume);
  }
  return out;
}

std::vector<ConvergencePoint> autocorr_convergence(const PointSet& p, const std::vector<double>& n_list, const Vec& z,
                                                   Estimator estimator) {
  if (z.size() != p.dim()) throw Error("autocorr_convergence: z dimension mismatch");
  std::vector<ConvergencePoint> out;
  out.reserve(n_list.size());
  const double tol = p.quantum();
  for (double n : n_list) {
    check_room(p, n, z.norm(), estimator, "autocorr_convergence");
    const double n2 = n * n;
    std::size_t count = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Vec x = p.point(i);
      if (x.squaredNorm() > n2) continue;
      if (estimator == Estimator::Anchored) {
        if (p.grid().find(x + z, tol)) ++count;
      } else {
        auto j = p.grid().find(x - z, tol);
        if (j && p.point(*j).squaredNorm() <= n2) ++count;
      }
    }
    out.push_back({n, static_cast<double>(count) / ball_volume(p.dim(), n)});
  }
  return out;
}

double overlap_oracle(const CutProjectScheme& cps, const IVec& z_label) {
  const auto [z, z_star] = cps.star_map(z_label);
  return overlap_volume(cps.window(), z_star) / cps.covolume();
}

}  // namespace aperiodica
