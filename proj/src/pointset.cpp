#include "aperiodica/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

namespace aperiodica {

namespace {

// Bucket size from the mean spacing of the sample.
double default_cell(const Mat& pts, const Region& region) {
  const auto n = static_cast<double>(std::max<Eigen::Index>(pts.cols(), 1));
  const double vol = region.volume();
  return std::max(1e-12, std::pow(vol / n, 1.0 / static_cast<double>(pts.rows())));
}

bool lex_less(const Vec& a, const Vec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

}  // namespace

PointSet::PointSet(Mat points, Region region, std::optional<IMat> labels, std::string meta)
    : points_(std::move(points)), region_(std::move(region)), labels_(std::move(labels)), meta_(std::move(meta)) {
  const int n_dim = dim();
  if (n_dim < 1 || n_dim > 3) throw Error("pointset: dimension must be 1..3");
  if (region_.dim() != n_dim) throw Error("pointset: region dimension does not match points");
  const double scale = std::max(1.0, region_.shape == Region::Shape::Ball ? region_.radius
                                                                           : region_.half_widths.maxCoeff());
  for (Eigen::Index i = 0; i < points_.cols(); ++i) {
    if (!points_.col(i).allFinite()) throw Error("pointset: non-finite coordinate");
    if (!region_.contains(points_.col(i), 1e-9 * scale)) throw Error("pointset: point outside region");
  }
  if (labels_) {
    if (labels_->cols() != points_.cols()) throw Error("pointset: labels not in bijection with points");
    std::set<Key> seen;
    for (Eigen::Index i = 0; i < labels_->cols(); ++i) {
      if (!seen.insert(to_key(labels_->col(i))).second) throw Error("pointset: duplicate label");
    }
  }
  grid_ = std::make_shared<const CellGrid>(points_, default_cell(points_, region_));
  min_distance_ = grid_->min_pair_distance();
  if (min_distance_ <= 0.0) throw Error("pointset: coincident points");
}

const IMat& PointSet::labels() const {
  if (!labels_) throw Error("pointset: no labels");
  return *labels_;
}

double PointSet::quantum() const {
  if (!std::isfinite(min_distance_)) return 1e-9;
  return 1e-9 * 0.5 * min_distance_;
}

PointSet PointSet::translated(const Vec& t) const {
  Mat moved = points_.colwise() + t;
  Region r = region_;
  r.center += t;
  return PointSet(std::move(moved), std::move(r), labels_, meta_);
}

PointSet crop(const PointSet& p, const Region& region) {
  if (region.dim() != p.dim()) throw Error("crop: dimension mismatch");
  const double slack = 1e-12 * (1.0 + p.region().origin_depth());
  bool inside = true;
  if (region.shape == Region::Shape::Ball) {
    inside = p.region().depth(region.center) >= region.radius - slack;
  } else {
    const int d = p.dim();
    for (int mask = 0; mask < (1 << d); ++mask) {
      Vec corner = region.center;
      for (int k = 0; k < d; ++k) corner[k] += ((mask >> k) & 1 ? 1.0 : -1.0) * region.half_widths[k];
      inside = inside && p.region().contains(corner, slack);
    }
  }
  if (!inside) throw Error("crop: new region is not inside the sampled region");
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < p.points().cols(); ++i)
    if (region.contains(p.points().col(i))) keep.push_back(i);
  Mat pts(p.dim(), static_cast<Eigen::Index>(keep.size()));
  std::optional<IMat> labels;
  if (p.has_labels()) labels = IMat(p.labels().rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    pts.col(static_cast<Eigen::Index>(k)) = p.points().col(keep[k]);
    if (labels) labels->col(static_cast<Eigen::Index>(k)) = p.labels().col(keep[k]);
  }
  return PointSet(std::move(pts), region, std::move(labels), p.meta());
}

std::size_t DifferenceSet::multiplicity(const Key& key) const {
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (keys[i] == key) return multiplicities[i];
  return 0;
}

Key quantize(const Vec& v, double quantum) {
  Key k(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) k[static_cast<std::size_t>(i)] = std::llround(v[i] / quantum);
  return k;
}

DeloneParams delone_params(const PointSet& p) {
  if (p.size() < 2) throw Error("delone_params: degenerate sample");
  DeloneParams out;
  const CellGrid& grid = p.grid();

  // Packing radius among points whose packing ball stays inside the region.
  double r = 0.5 * p.min_distance();
  {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Vec x = p.point(i);
      if (p.region().depth(x) < r) continue;
      grid.for_each_within(x, 2.0 * best, [&](std::size_t j, double d2) {
        if (j != i) best = std::min(best, std::sqrt(d2));
      });
    }
    if (std::isfinite(best)) r = 0.5 * best;
  }
  out.packing_radius = r;

  if (p.dim() == 1) {
    std::vector<double> xs(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) xs[i] = p.points()(0, static_cast<Eigen::Index>(i));
    std::sort(xs.begin(), xs.end());
    double gap = 0.0;
    for (std::size_t i = 1; i < xs.size(); ++i) gap = std::max(gap, xs[i] - xs[i - 1]);
    out.covering_radius = 0.5 * gap;
    out.exact = true;
    return out;
  }

  // Grid sampling at step packing_radius / 10; a sample location counts only
  // when its nearest-point ball lies inside the region.
  const double step = r / 10.0;
  const Region& reg = p.region();
  const double reach = reg.shape == Region::Shape::Ball ? reg.radius : reg.half_widths.maxCoeff();
  const auto steps = static_cast<long long>(std::ceil(reach / step));
  double cover = 0.0;
  const int d = p.dim();
  std::vector<long long> idx(static_cast<std::size_t>(d), -steps);
  Vec g(d);
  while (true) {
    for (int k = 0; k < d; ++k) g[k] = reg.center[k] + static_cast<double>(idx[static_cast<std::size_t>(k)]) * step;
    const double depth = reg.depth(g);
    if (depth > cover) {
      auto nn = grid.nearest(g, depth);
      if (nn && nn->second <= depth) cover = std::max(cover, nn->second);
    }
    int k = 0;
    while (k < d && ++idx[static_cast<std::size_t>(k)] > steps) idx[static_cast<std::size_t>(k++)] = -steps;
    if (k == d) break;
  }
  out.covering_radius = cover;
  out.exact = false;
  return out;
}

DifferenceSet difference_set(const PointSet& p, double s_max) {
  if (!(s_max > 0.0)) throw Error("difference_set: s_max must be positive");
  DifferenceSet out;
  out.cutoff = s_max;
  out.exact = p.has_labels();
  const double q = p.quantum();
  std::map<Key, std::pair<Vec, std::size_t>> classes;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vec x = p.point(i);
    p.grid().for_each_within(x, s_max, [&](std::size_t j, double) {
      Vec z = x - p.point(j);
      Key key = out.exact ? to_key(p.label(i) - p.label(j)) : quantize(z, q);
      auto [it, inserted] = classes.try_emplace(std::move(key), z, 0);
      ++it->second.second;
    });
  }
  std::vector<std::pair<Key, std::pair<Vec, std::size_t>>> items(classes.begin(), classes.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return lex_less(a.second.first, b.second.first);
  });
  for (auto& [key, val] : items) {
    out.keys.push_back(key);
    out.vectors.push_back(val.first);
    out.multiplicities.push_back(val.second);
  }
  return out;
}

double meyer_diagnostic(const PointSet& p, double s_max) {
  if (p.empty()) throw Error("meyer_diagnostic: empty sample");
  const DifferenceSet ds = difference_set(p, s_max);
  if (ds.size() < 2) return std::numeric_limits<double>::infinity();
  Mat vs(p.dim(), static_cast<Eigen::Index>(ds.size()));
  for (std::size_t i = 0; i < ds.size(); ++i) vs.col(static_cast<Eigen::Index>(i)) = ds.vectors[i];
  CellGrid grid(vs, std::max(p.quantum(), s_max / 64.0));
  return grid.min_pair_distance();
}

}  // namespace aperiodica
