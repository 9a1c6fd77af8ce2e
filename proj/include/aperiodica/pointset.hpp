#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aperiodica/region.hpp"
#include "aperiodica/spatial_grid.hpp"
#include "aperiodica/types.hpp"

namespace aperiodica {

// Finite sample of a Delone set inside a bounded region. Points are the
// columns of a dim x n matrix; optional exact labels are the columns of an
// integer matrix (one lattice-coordinate vector per point).
//
// Immutable after construction; copies share the bucketing index.
class PointSet {
 public:
  PointSet(Mat points, Region region, std::optional<IMat> labels = std::nullopt, std::string meta = {});

  int dim() const { return static_cast<int>(points_.rows()); }
  std::size_t size() const { return static_cast<std::size_t>(points_.cols()); }
  bool empty() const { return size() == 0; }

  const Mat& points() const { return points_; }
  Vec point(std::size_t i) const { return points_.col(static_cast<Eigen::Index>(i)); }
  const Region& region() const { return region_; }
  bool has_labels() const { return labels_.has_value(); }
  const IMat& labels() const;
  IVec label(std::size_t i) const { return labels().col(static_cast<Eigen::Index>(i)); }
  const std::string& meta() const { return meta_; }

  // Smallest distance between distinct points (+inf for fewer than 2).
  double min_distance() const { return min_distance_; }
  // Quantum used to identify floating-point configurations: 1e-9 x packing radius.
  double quantum() const;

  const CellGrid& grid() const { return *grid_; }
  std::optional<std::size_t> find(const Vec& x) const { return grid_->find(x, quantum()); }

  // The whole sample (points and region) moved by t.
  PointSet translated(const Vec& t) const;

 private:
  Mat points_;
  Region region_;
  std::optional<IMat> labels_;
  std::string meta_;
  double min_distance_ = 0.0;
  std::shared_ptr<const CellGrid> grid_;
};

struct DeloneParams {
  double packing_radius = 0.0;
  double covering_radius = 0.0;
  bool exact = false;
};

// Multiset of difference vectors x - y (x, y in the sample, |x - y| <= cutoff).
struct DifferenceSet {
  std::vector<Vec> vectors;
  std::vector<std::size_t> multiplicities;
  std::vector<Key> keys;  // label differences when exact, else quantized coordinates
  double cutoff = 0.0;
  bool exact = false;

  std::size_t size() const { return vectors.size(); }
  // Multiplicity of the class containing z, 0 when absent.
  std::size_t multiplicity(const Key& key) const;
};

// Points of p inside `region`, which must lie inside p's region.
PointSet crop(const PointSet& p, const Region& region);

DeloneParams delone_params(const PointSet& p);
DifferenceSet difference_set(const PointSet& p, double s_max);
double meyer_diagnostic(const PointSet& p, double s_max);

// Quantized identity of a real vector at the given quantum.
Key quantize(const Vec& v, double quantum);

}  // namespace aperiodica
