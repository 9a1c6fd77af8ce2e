#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "aperiodica/types.hpp"

namespace aperiodica {

// Uniform bucketing of a fixed point cloud (columns of a dim x n matrix,
// dim <= 3) for radius and nearest-neighbour queries.
class CellGrid {
 public:
  CellGrid() = default;
  CellGrid(const Mat& points, double cell);

  int dim() const { return dim_; }
  std::size_t size() const { return static_cast<std::size_t>(points_.cols()); }
  double cell() const { return cell_; }
  const Mat& points() const { return points_; }

  // Calls f(index, squared distance) for every point with |p - x| <= r.
  template <class F>
  void for_each_within(const Vec& x, double r, F&& f) const;

  // Nearest point within max_r, as (index, distance).
  std::optional<std::pair<std::size_t, double>> nearest(const Vec& x, double max_r) const;

  // Index of a point within tol of x (the closest one if several).
  std::optional<std::size_t> find(const Vec& x, double tol) const;

  // Smallest distance between two distinct points (+inf for n < 2).
  double min_pair_distance() const;

 private:
  std::uint64_t pack(const std::int64_t c[3]) const;

  int dim_ = 0;
  double cell_ = 1.0;
  Mat points_;
  Eigen::Vector3d origin_ = Eigen::Vector3d::Zero();
  std::int64_t extent_[3] = {1, 1, 1};
  std::vector<std::uint32_t> order_;
  std::unordered_map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>> cells_;
};

template <class F>
void CellGrid::for_each_within(const Vec& x, double r, F&& f) const {
  if (points_.cols() == 0) return;
  std::int64_t lo[3] = {0, 0, 0};
  std::int64_t hi[3] = {0, 0, 0};
  for (int d = 0; d < dim_; ++d) {
    double a = std::floor((x[d] - r - origin_[d]) / cell_);
    double b = std::floor((x[d] + r - origin_[d]) / cell_);
    if (b < 0.0 || a > static_cast<double>(extent_[d] - 1)) return;
    lo[d] = std::max<std::int64_t>(0, static_cast<std::int64_t>(a));
    hi[d] = std::min<std::int64_t>(extent_[d] - 1, static_cast<std::int64_t>(b));
  }
  const double r2 = r * r;
  std::int64_t c[3] = {0, 0, 0};
  for (c[2] = lo[2]; c[2] <= hi[2]; ++c[2]) {
    for (c[1] = lo[1]; c[1] <= hi[1]; ++c[1]) {
      for (c[0] = lo[0]; c[0] <= hi[0]; ++c[0]) {
        auto it = cells_.find(pack(c));
        if (it == cells_.end()) continue;
        for (std::uint32_t k = it->second.first; k < it->second.second; ++k) {
          const std::uint32_t idx = order_[k];
          const double d2 = (points_.col(idx) - x).squaredNorm();
          if (d2 <= r2) f(static_cast<std::size_t>(idx), d2);
        }
      }
    }
  }
}

}  // namespace aperiodica
