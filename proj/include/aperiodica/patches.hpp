#pragma once

#include <optional>
#include <vector>

#include "aperiodica/pointset.hpp"

namespace aperiodica {

// Centered ball patch (P - x) ∩ B_S. Offsets are lexicographically sorted
// columns; the key is the flattened list of exact label differences when the
// sample carries labels, else of quantized offsets.
struct Patch {
  double radius = 0.0;
  Mat offsets;
  Key key;
  bool exact = false;

  std::size_t size() const { return static_cast<std::size_t>(offsets.cols()); }
  friend bool operator==(const Patch& a, const Patch& b) { return a.exact == b.exact && a.key == b.key; }
};

struct PatchClass {
  Patch representative;
  std::size_t count = 0;
  std::vector<std::size_t> centers;
};

// Classes are ordered by key.
struct PatchCensus {
  double radius = 0.0;
  std::vector<PatchClass> classes;
  std::size_t centers_considered = 0;

  std::size_t n_classes() const { return classes.size(); }
};

struct FrequencyEstimate {
  double nu = 0.0;
  double sup_dev = 0.0;
};

struct EntropyPoint {
  double s = 0.0;
  std::size_t n_patches = 0;
  double entropy_density = 0.0;
};

Patch patch_at(const PointSet& p, std::size_t center, double s);
Patch patch_at(const PointSet& p, const Vec& x, double s);

PatchCensus patch_census(const PointSet& p, double s);

// Occurrence density of `patch` in the centered ball B_{s_avg}, and the
// largest deviation of the same estimate over balls centered at
// `window_positions`.
FrequencyEstimate patch_frequency(const PointSet& p, const Patch& patch, const std::vector<Vec>& window_positions,
                                  double s_avg);

// Smallest R' such that every ball of radius R' centered on a grid (step =
// packing radius) inside the central half of the region holds an occurrence.
// nullopt when the patch is absent or R' exceeds half the region size.
std::optional<double> repetitivity_radius(const PointSet& p, const Patch& patch);

std::vector<EntropyPoint> entropy_estimate(const PointSet& p, const std::vector<double>& s_list);

}  // namespace aperiodica
