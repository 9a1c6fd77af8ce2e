#include "aperiodica/patches.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace aperiodica {

namespace {

bool is_interior(const PointSet& p, const Vec& x, double s) { return p.region().depth(x) >= s; }

double region_reach(const Region& r) {
  return r.shape == Region::Shape::Ball ? r.radius : r.half_widths.minCoeff();
}

// Occurrence centers of `patch` among interior centers within distance r of c.
std::vector<std::size_t> occurrences_near(const PointSet& p, const Patch& patch, const Vec& c, double r) {
  std::vector<std::size_t> hits;
  p.grid().for_each_within(c, r, [&](std::size_t j, double) {
    if (!is_interior(p, p.point(j), patch.radius)) return;
    if (patch_at(p, j, patch.radius) == patch) hits.push_back(j);
  });
  return hits;
}

}  // namespace

Patch patch_at(const PointSet& p, std::size_t center, double s) {
  if (center >= p.size()) throw Error("patch_at: center index out of range");
  const Vec x = p.point(center);
  if (!is_interior(p, x, s)) throw Error("patch_at: boundary patch");

  std::vector<std::size_t> members;
  p.grid().for_each_within(x, s, [&](std::size_t j, double) { members.push_back(j); });

  Patch out;
  out.radius = s;
  out.exact = p.has_labels();
  const int d = p.dim();
  std::vector<Key> keys;
  keys.reserve(members.size());
  std::vector<Vec> offs;
  offs.reserve(members.size());
  const double q = p.quantum();
  for (std::size_t j : members) {
    Vec off = p.point(j) - x;
    keys.push_back(out.exact ? to_key(p.label(j) - p.label(center)) : quantize(off, q));
    offs.push_back(std::move(off));
  }
  std::vector<std::size_t> order(members.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    for (int k = 0; k < d; ++k) {
      if (offs[a][k] != offs[b][k]) return offs[a][k] < offs[b][k];
    }
    return keys[a] < keys[b];
  });
  // The key is ordered by the key vectors themselves so float noise in the
  // offsets cannot reorder it.
  std::vector<std::size_t> key_order = order;
  std::sort(key_order.begin(), key_order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  out.offsets.resize(d, static_cast<Eigen::Index>(members.size()));
  for (std::size_t i = 0; i < order.size(); ++i) out.offsets.col(static_cast<Eigen::Index>(i)) = offs[order[i]];
  for (std::size_t i : key_order) out.key.insert(out.key.end(), keys[i].begin(), keys[i].end());
  return out;
}

Patch patch_at(const PointSet& p, const Vec& x, double s) {
  auto idx = p.find(x);
  if (!idx) throw Error("patch_at: center is not a point of the sample");
  return patch_at(p, *idx, s);
}

PatchCensus patch_census(const PointSet& p, double s) {
  if (!(s > 0.0)) throw Error("patch_census: radius must be positive");
  PatchCensus out;
  out.radius = s;
  std::map<Key, PatchClass> classes;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!is_interior(p, p.point(i), s)) continue;
    Patch patch = patch_at(p, i, s);
    auto it = classes.find(patch.key);
    if (it == classes.end()) {
      Key key = patch.key;
      it = classes.emplace(std::move(key), PatchClass{std::move(patch), 0, {}}).first;
    }
    ++it->second.count;
    it->second.centers.push_back(i);
    ++out.centers_considered;
  }
  if (out.centers_considered == 0) throw Error("patch_census: region too small");
  out.classes.reserve(classes.size());
  for (auto& [key, cls] : classes) out.classes.push_back(std::move(cls));
  return out;
}

FrequencyEstimate patch_frequency(const PointSet& p, const Patch& patch, const std::vector<Vec>& window_positions,
                                  double s_avg) {
  if (!(s_avg > 0.0)) throw Error("patch_frequency: s_avg must be positive");
  const int d = p.dim();
  const double vol = ball_volume(d, s_avg);
  auto estimate = [&](const Vec& c) {
    if (p.region().depth(c) < s_avg + patch.radius) throw Error("patch_frequency: averaging ball leaves the region");
    return static_cast<double>(occurrences_near(p, patch, c, s_avg).size()) / vol;
  };
  FrequencyEstimate out;
  out.nu = estimate(Vec::Zero(d));
  for (const Vec& w : window_positions) out.sup_dev = std::max(out.sup_dev, std::abs(estimate(w) - out.nu));
  return out;
}

std::optional<double> repetitivity_radius(const PointSet& p, const Patch& patch) {
  const int d = p.dim();
  const Region& reg = p.region();
  const double half = 0.5 * region_reach(reg);

  std::vector<std::size_t> locators;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!is_interior(p, p.point(i), patch.radius)) continue;
    if (patch_at(p, i, patch.radius) == patch) locators.push_back(i);
  }
  if (locators.empty()) return std::nullopt;
  Mat loc(d, static_cast<Eigen::Index>(locators.size()));
  for (std::size_t i = 0; i < locators.size(); ++i) loc.col(static_cast<Eigen::Index>(i)) = p.point(locators[i]);
  CellGrid grid(loc, p.grid().cell());

  const double step = 0.5 * p.min_distance();
  const auto steps = static_cast<long long>(std::floor(half / step));
  std::vector<long long> idx(static_cast<std::size_t>(d), -steps);
  double worst = 0.0;
  Vec g(d);
  while (true) {
    for (int k = 0; k < d; ++k) g[k] = reg.center[k] + static_cast<double>(idx[static_cast<std::size_t>(k)]) * step;
    if ((g - reg.center).norm() <= half) {
      auto nn = grid.nearest(g, half);
      if (!nn) return std::nullopt;
      worst = std::max(worst, nn->second);
    }
    int k = 0;
    while (k < d && ++idx[static_cast<std::size_t>(k)] > steps) idx[static_cast<std::size_t>(k++)] = -steps;
    if (k == d) break;
  }
  return worst;
}

std::vector<EntropyPoint> entropy_estimate(const PointSet& p, const std::vector<double>& s_list) {
  std::vector<EntropyPoint> out;
  out.reserve(s_list.size());
  for (double s : s_list) {
    const PatchCensus census = patch_census(p, s);
    const auto n = census.n_classes();
    out.push_back({s, n, std::log(static_cast<double>(n)) / ball_volume(p.dim(), s)});
  }
  return out;
}

}  // namespace aperiodica
