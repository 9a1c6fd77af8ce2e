#pragma once

#include <vector>

#include "aperiodica/cps.hpp"
#include "aperiodica/pointset.hpp"

namespace aperiodica {

// d(p1, p2) = min(1/sqrt 2, inf ε) over ε such that p1 - x and p2 - y agree on
// B_{1/ε} for some x, y in B_ε. Bisection over [eps_grid, 1/sqrt 2]; the
// result is the midpoint of the final bracket (width <= eps_grid), 1/sqrt 2
// when even the cap is infeasible. Symmetric in its arguments.
double hull_metric(const PointSet& p1, const PointSet& p2, double eps_grid);

// Torus T = R^{N+m} / L in lattice coordinates v in [0, 1)^{N+m}; the
// physical translation t acts by v + B^{-1}(t, 0) mod 1.
class TorusSystem {
 public:
  explicit TorusSystem(const CutProjectScheme& cps);
  int phys_dim() const { return phys_dim_; }
  int total_dim() const { return static_cast<int>(basis_inv_.rows()); }
  const Mat& basis_inverse() const { return basis_inv_; }
  Vec act(const Vec& v, const Vec& t) const;
  // ν_q = 2π (B^{-T} q)_phys: e_q(α_t v) = e^{i ν_q·t} e_q(v).
  Vec frequency(const IVec& q) const;
  // |2π B^{-T} q| including the internal part.
  double full_frequency(const IVec& q) const;

 private:
  int phys_dim_;
  Mat basis_inv_;
  Mat dual_;
};

// B^{-1}(t, h) mod 1, the address of the model set t + ⋏(W - h).
Vec torus_address(const CutProjectScheme& cps, const Vec& t, const Vec& h);

// Wraps each coordinate into [0, 1).
Vec wrap_unit(Vec v);

struct TrigTerm {
  IVec q;
  Complex coeff;
};

// f(v) = Σ coeff exp(2πi q·v).
struct TrigPolynomial {
  std::vector<TrigTerm> terms;
  Complex operator()(const Vec& v) const;
  std::size_t size() const { return terms.size(); }
  bool empty() const { return terms.empty(); }
  double coeff_l1() const;
};

// Character cocycle φ_ξ(x, ω) = e^{i ξ·x}.
struct Cocycle {
  Vec xi;
  Complex operator()(const Vec& x, const Vec& omega) const;
};

enum class AverageMethod {
  Auto,        // closed form (N <= 3 always has one)
  ClosedForm,  // per-term ball integrals
  Quadrature,  // composite Gauss-Legendre, 4 nodes per step
};

// (1/|B_n|) ∫_{B_n} φ(t, ω) f(α_{-t} ω) dt.
// quad_step must keep the phase change per step at or below 0.1 rad for ξ and
// every term; otherwise the call fails.
Complex ww_average(const TorusSystem& ts, const TrigPolynomial& f, const Cocycle& c, const Vec& omega, double n,
                   double quad_step, AverageMethod method = AverageMethod::Auto);

// (1/|B_n|) ∫_{B_n} e^{i a·t} dt.
Complex ball_average_exp(const Vec& a, double n, double quad_step, AverageMethod method);

// Terms with ν_q = ξ componentwise within 1e-10.
TrigPolynomial ww_projection(const TorusSystem& ts, const TrigPolynomial& f, const Cocycle& c);

struct UniformPoint {
  double n = 0.0;
  double sup_dev = 0.0;
};

std::vector<UniformPoint> ww_uniform_test(const TorusSystem& ts, const TrigPolynomial& f, const Cocycle& c,
                                          const std::vector<Vec>& omega_samples, const std::vector<double>& n_list,
                                          double quad_step, AverageMethod method = AverageMethod::Auto);

// Uniform grid i / per_dim in every coordinate.
std::vector<Vec> omega_grid(int dim, int per_dim = 100);

// Largest step allowed by the phase rule for (ts, f, c).
double max_quad_step(const TorusSystem& ts, const TrigPolynomial& f, const Cocycle& c);

}  // namespace aperiodica
