#pragma once

#include <string>
#include <vector>

#include "aperiodica/cps.hpp"
#include "aperiodica/pointset.hpp"

namespace aperiodica {

enum class Estimator {
  // (1/|B_n|) #{(x, y) : x, y in B_n, x - y = z}
  PairsInBall,
  // (1/|B_n|) #{x in B_n : x + z in the sample}
  Anchored,
};

std::string to_string(Estimator e);
Estimator estimator_from_string(const std::string& s);

// Finitely supported weighted Dirac comb; support vectors sorted
// lexicographically. Keys identify the support points exactly (label
// differences when the sample has labels).
struct WeightedComb {
  std::vector<Vec> support;
  std::vector<double> weights;
  std::vector<Key> keys;
  bool exact = false;
  double n = 0.0;
  double normalization_volume = 0.0;
  Estimator estimator = Estimator::Anchored;

  std::size_t size() const { return support.size(); }
  // Weight of the support point within tol of z (0 when absent).
  double weight_at(const Vec& z, double tol) const;
};

// Balls B_n are centered at the origin. Anchored needs B_{n + s_max} inside
// the region, pairs-in-ball needs B_n inside.
WeightedComb autocorr(const PointSet& p, double n, double s_max, Estimator estimator = Estimator::Anchored);

struct ConvergencePoint {
  double n = 0.0;
  double c = 0.0;
};

std::vector<ConvergencePoint> autocorr_convergence(const PointSet& p, const std::vector<double>& n_list, const Vec& z,
                                                   Estimator estimator = Estimator::Anchored);

// vol(W ∩ (W - z*)) / covolume: the limiting coefficient c_z of a regular
// model set at the lattice vector with coordinates z_label.
double overlap_oracle(const CutProjectScheme& cps, const IVec& z_label);

}  // namespace aperiodica
