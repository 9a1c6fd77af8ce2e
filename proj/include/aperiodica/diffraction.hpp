#pragma once

#include <optional>
#include <vector>

#include "aperiodica/autocorr.hpp"
#include "aperiodica/cps.hpp"
#include "aperiodica/kernel.hpp"
#include "aperiodica/pointset.hpp"

namespace aperiodica {

// Wave convention: each point x contributes exp(-i ξ·x); see
// docs/conventions.md.
struct BTAmplitude {
  Vec xi;
  double s = 0.0;
  Complex value;
};

struct Peak {
  Vec xi;
  double intensity_bt = 0.0;
  std::optional<double> intensity_closed;
  std::optional<IVec> q_label;
  // |c_s^ξ|^2 for every s of the scan, in scan order.
  std::vector<double> bt_sequence;
};

// Entries sorted by |ξ| (stable).
struct PeakList {
  std::vector<Peak> entries;
  std::vector<double> s_list;
  double s_used = 0.0;
  double k_phys_max = 0.0;
  double k_int_max = 0.0;
  // Grid step of a uniform scan (peak position uncertainty), 0 otherwise.
  double grid_step = 0.0;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
};

// (1/|B_s|) Σ_{x ∈ P ∩ B_s} exp(-i ξ·x), balls centered at the origin.
BTAmplitude bt_amplitude(const PointSet& p, const Vec& xi, double s);

// Measures |c_s^ξ|^2 for every candidate and every s (sorted ascending);
// intensity_bt is the value at the largest s. Work is split over `threads`
// with deterministic output.
PeakList peak_scan(const PointSet& p, const std::vector<Vec>& candidates, std::vector<double> s_list,
                   int threads = 1);

// Peak scan over the module elements, with closed-form intensities and labels.
PeakList module_scan(const PointSet& p, const CutProjectScheme& cps, const FourierModule& module,
                     std::vector<double> s_list, int threads = 1);

// Uniform grid over [lo, hi]^N including both ends (within rounding).
std::vector<Vec> grid_candidates(int dim, double lo, double hi, double step);

// |∫_W exp(i k*·y) dy|^2 / covolume^2.
double model_set_intensity(const CutProjectScheme& cps, const ModuleElement& element);

struct ConsistencyResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_error = 0.0;
};

// lhs = Σ_z w(z) (φ * φ~)(z) from the comb, rhs = Σ_peaks I(ξ) |φ^(ξ)|^2.
ConsistencyResult pure_point_consistency(const PointSet& p, const PeakList& peaks, const SmoothingKernel& kernel,
                                         const WeightedComb& comb);

// max |I(ξ) - I(Vξ)| over the peaks. I(Vξ) is taken from the list when a peak
// lies within `tol` of Vξ and re-measured on `p` at s_used otherwise.
double symmetry_check(const PointSet& p, const PeakList& peaks, const Mat& v, double tol);

// Rotation by `angle` in the plane of the first two coordinates.
Mat rotation_2d(double angle);

}  // namespace aperiodica
