#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aperiodica/pointset.hpp"
#include "aperiodica/window.hpp"

namespace aperiodica {

// Finite witnesses checked when a scheme is built.
struct CheckBounds {
  // Number of integer vectors scanned (a centered cube in Z^(N+m)); 0 skips
  // both witnesses.
  long long q_check = 10000;
  // A nonzero q whose physical part is shorter than this breaks injectivity.
  double eps_inj = 1e-9;
  // Cell size for the density witness; <= 0 picks 1/8 of the window extent.
  double delta_dense = 0.0;
};

// Cut-and-project scheme over R^N with internal space R^m. The lattice is
// generated by the columns of the (N+m)x(N+m) basis B: rows 0..N-1 are
// physical components, rows N.. are internal components.
//
// Densities and intensities divide window volumes by |det B|; see
// docs/conventions.md.
class CutProjectScheme {
 public:
  CutProjectScheme(int phys_dim, int int_dim, Mat basis, Window window, CheckBounds checks = {},
                   std::string name = {});

  int phys_dim() const { return phys_dim_; }
  int int_dim() const { return int_dim_; }
  int total_dim() const { return phys_dim_ + int_dim_; }
  const Mat& basis() const { return basis_; }
  const Mat& basis_inverse() const { return basis_inv_; }
  // 2 pi B^{-T}.
  const Mat& dual_basis() const { return dual_; }
  double covolume() const { return covolume_; }
  const Window& window() const { return window_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  // vol(W) / covolume.
  double density() const { return window_.volume() / covolume_; }

  // (physical part, internal part) of B q.
  std::pair<Vec, Vec> star_map(const IVec& q) const;

  CutProjectScheme with_window(Window w) const;

 private:
  int phys_dim_;
  int int_dim_;
  Mat basis_;
  Mat basis_inv_;
  Mat dual_;
  double covolume_ = 0.0;
  Window window_;
  CheckBounds checks_;
  std::string name_;
  std::vector<std::string> warnings_;
};

// "fibonacci" or "octagonal".
CutProjectScheme builtin_scheme(std::string_view name);

// Model set t + ⋏(W - h) restricted to the centered physical ball of the
// given radius, labelled by lattice coordinates q (of the unshifted points).
PointSet model_set_points(const CutProjectScheme& cps, double region_radius);
PointSet model_set_points(const CutProjectScheme& cps, double region_radius, const Vec& t, const Vec& h);

struct ModuleElement {
  IVec q;
  Vec k;
  Vec k_star;
};

// Dual-lattice elements (k, k*) = 2 pi B^{-T} q with |k| <= k_phys_max and
// |k*| <= k_int_max, sorted by |k| (ties by q).
struct FourierModule {
  Mat dual_basis;
  std::vector<ModuleElement> elements;
  double k_phys_max = 0.0;
  double k_int_max = 0.0;

  std::size_t size() const { return elements.size(); }
};

FourierModule fourier_module(const CutProjectScheme& cps, double k_phys_max, double k_int_max);

}  // namespace aperiodica
