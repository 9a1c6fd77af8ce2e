#include "aperiodica/spatial_grid.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace aperiodica {

namespace {
constexpr std::int64_t kMaxCells = (std::int64_t{1} << 20);
}

CellGrid::CellGrid(const Mat& points, double cell) : dim_(static_cast<int>(points.rows())), points_(points) {
  if (dim_ < 1 || dim_ > 3) throw Error("spatial grid: dimension must be 1..3");
  if (!(cell > 0.0) || !std::isfinite(cell)) cell = 1.0;
  const auto n = points_.cols();
  if (n == 0) {
    cell_ = cell;
    return;
  }
  Vec lo = points_.rowwise().minCoeff();
  Vec hi = points_.rowwise().maxCoeff();
  const double span = (hi - lo).maxCoeff();
  cell_ = std::max(cell, span / static_cast<double>(kMaxCells - 2));
  for (int d = 0; d < dim_; ++d) {
    origin_[d] = lo[d];
    extent_[d] = static_cast<std::int64_t>(std::floor((hi[d] - lo[d]) / cell_)) + 1;
  }

  std::vector<std::uint64_t> keys(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    std::int64_t c[3] = {0, 0, 0};
    for (int d = 0; d < dim_; ++d) {
      c[d] = static_cast<std::int64_t>(std::floor((points_(d, i) - origin_[d]) / cell_));
      c[d] = std::clamp<std::int64_t>(c[d], 0, extent_[d] - 1);
    }
    keys[static_cast<std::size_t>(i)] = pack(c);
  }
  order_.resize(static_cast<std::size_t>(n));
  std::iota(order_.begin(), order_.end(), 0u);
  std::stable_sort(order_.begin(), order_.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
  std::uint32_t start = 0;
  for (std::uint32_t k = 1; k <= order_.size(); ++k) {
    if (k == order_.size() || keys[order_[k]] != keys[order_[start]]) {
      cells_.emplace(keys[order_[start]], std::make_pair(start, k));
      start = k;
    }
  }
}

std::uint64_t CellGrid::pack(const std::int64_t c[3]) const {
  return (static_cast<std::uint64_t>(c[2]) << 42) | (static_cast<std::uint64_t>(c[1]) << 21) |
         static_cast<std::uint64_t>(c[0]);
}

std::optional<std::pair<std::size_t, double>> CellGrid::nearest(const Vec& x, double max_r) const {
  if (points_.cols() == 0) return std::nullopt;
  double r = cell_;
  while (true) {
    const double rr = std::min(r, max_r);
    std::size_t best = 0;
    double best2 = std::numeric_limits<double>::infinity();
    for_each_within(x, rr, [&](std::size_t i, double d2) {
      if (d2 < best2) {
        best2 = d2;
        best = i;
      }
    });
    if (std::isfinite(best2)) return std::make_pair(best, std::sqrt(best2));
    if (rr >= max_r) return std::nullopt;
    r *= 2.0;
  }
}

std::optional<std::size_t> CellGrid::find(const Vec& x, double tol) const {
  std::optional<std::size_t> best;
  double best2 = std::numeric_limits<double>::infinity();
  for_each_within(x, tol, [&](std::size_t i, double d2) {
    if (d2 < best2) {
      best2 = d2;
      best = i;
    }
  });
  return best;
}

double CellGrid::min_pair_distance() const {
  const auto n = points_.cols();
  double best = std::numeric_limits<double>::infinity();
  if (n < 2) return best;
  // Each point's nearest other neighbour, searched with a growing radius.
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vec x = points_.col(i);
    double r = cell_;
    while (true) {
      const double rr = std::min(r, best);
      double local = std::numeric_limits<double>::infinity();
      for_each_within(x, rr, [&](std::size_t j, double d2) {
        if (static_cast<Eigen::Index>(j) != i) local = std::min(local, d2);
      });
      if (std::isfinite(local)) {
        best = std::min(best, std::sqrt(local));
        break;
      }
      if (rr >= best) break;
      r *= 2.0;
    }
  }
  return best;
}

}  // namespace aperiodica
