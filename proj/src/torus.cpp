#include <algorithm>
#include <array>
#include <cmath>

#include "aperiodica/hull.hpp"

namespace aperiodica {

namespace {

constexpr std::array<double, 4> kGLx = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                                        0.8611363115940526};
constexpr std::array<double, 4> kGLw = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                                        0.3478548451374538};

// Composite 4-point Gauss-Legendre over [a, b] with `panels` equal panels.
template <class F>
double gauss_legendre(F&& f, double a, double b, long long panels) {
  const double w = (b - a) / static_cast<double>(panels);
  double sum = 0.0;
  for (long long p = 0; p < panels; ++p) {
    const double mid = a + (static_cast<double>(p) + 0.5) * w;
    double s = 0.0;
    for (int k = 0; k < 4; ++k) s += kGLw[static_cast<std::size_t>(k)] * f(mid + 0.5 * w * kGLx[static_cast<std::size_t>(k)]);
    sum += 0.5 * w * s;
  }
  return sum;
}

long long panels_for(double length, double step) {
  return std::max<long long>(1, static_cast<long long>(std::ceil(length / step - 1e-9)));
}

double closed_form(int dim, double u) {
  const double u2 = u * u;
  switch (dim) {
    case 1:
      return u < 1e-4 ? 1.0 - u2 / 6.0 + u2 * u2 / 120.0 : std::sin(u) / u;
    case 2:
      return u < 1e-4 ? 1.0 - u2 / 8.0 + u2 * u2 / 192.0 : 2.0 * std::cyl_bessel_j(1.0, u) / u;
    default:
      return u < 1e-3 ? 1.0 - u2 / 10.0 + u2 * u2 / 280.0 : 3.0 * (std::sin(u) - u * std::cos(u)) / (u2 * u);
  }
}

double quadrature(int dim, double a, double n, double h) {
  if (dim == 1) {
    const double re = gauss_legendre([&](double t) { return std::cos(a * t); }, -n, n, panels_for(2.0 * n, h));
    return re / (2.0 * n);
  }
  if (dim == 2) {
    // Polar coordinates; the periodic angular integral uses the trapezoid rule
    // with enough nodes to resolve e^{i a r cos θ}.
    auto ring = [&](double r) {
      const double z = a * r;
      const int m = std::max(16, 2 * static_cast<int>(std::ceil(0.5 * (z + 10.0 * std::cbrt(z) + 24.0))));
      double s = 0.0;
      for (int j = 0; j < m; ++j) s += std::cos(z * std::cos(2.0 * kPi * j / m));
      return r * s * 2.0 * kPi / m;
    };
    return gauss_legendre(ring, 0.0, n, panels_for(n, h)) / (kPi * n * n);
  }
  // Spherical coordinates about a; the polar cosine u is integrated with
  // phase steps of at most 0.1.
  auto shell = [&](double r) {
    const double z = a * r;
    const long long pu = panels_for(2.0 * z, 0.1);
    return r * r * 2.0 * kPi * gauss_legendre([&](double u) { return std::cos(z * u); }, -1.0, 1.0, pu);
  };
  return gauss_legendre(shell, 0.0, n, panels_for(n, h)) / (4.0 / 3.0 * kPi * n * n * n);
}

}  // namespace

TorusSystem::TorusSystem(const CutProjectScheme& cps)
    : phys_dim_(cps.phys_dim()), basis_inv_(cps.basis_inverse()), dual_(cps.dual_basis()) {}

Vec wrap_unit(Vec v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v[i] -= std::floor(v[i]);
    if (v[i] >= 1.0) v[i] = 0.0;
  }
  return v;
}

Vec TorusSystem::act(const Vec& v, const Vec& t) const {
  if (v.size() != total_dim() || t.size() != phys_dim_) throw Error("torus act: dimension mismatch");
  return wrap_unit(v + basis_inv_.leftCols(phys_dim_) * t);
}

Vec TorusSystem::frequency(const IVec& q) const {
  if (q.size() != total_dim()) throw Error("torus frequency: dimension mismatch");
  return (dual_ * q.cast<double>()).head(phys_dim_);
}

double TorusSystem::full_frequency(const IVec& q) const { return (dual_ * q.cast<double>()).norm(); }

Vec torus_address(const CutProjectScheme& cps, const Vec& t, const Vec& h) {
  if (t.size() != cps.phys_dim() || h.size() != cps.int_dim()) throw Error("torus_address: dimension mismatch");
  Vec th(cps.total_dim());
  th << t, h;
  return wrap_unit(cps.basis_inverse() * th);
}

Complex TrigPolynomial::operator()(const Vec& v) const {
  Complex sum = 0.0;
  for (const auto& term : terms) {
    if (term.q.size() != v.size()) throw Error("trig polynomial: dimension mismatch");
    sum += term.coeff * std::polar(1.0, 2.0 * kPi * term.q.cast<double>().dot(v));
  }
  return sum;
}

double TrigPolynomial::coeff_l1() const {
  double s = 0.0;
  for (const auto& term : terms) s += std::abs(term.coeff);
  return s;
}

Complex Cocycle::operator()(const Vec& x, const Vec&) const { return std::polar(1.0, xi.dot(x)); }

double max_quad_step(const TorusSystem& ts, const TrigPolynomial& f, const Cocycle& c) {
  double rate = c.xi.norm();
  double worst = 0.0;
  for (const auto& term : f.terms) worst = std::max(worst, ts.full_frequency(term.q));
  rate += worst;
  return rate > 0.0 ? 0.1 / rate : std::numeric_limits<double>::infinity();
}

Complex ball_average_exp(const Vec& a, double n, double quad_step, AverageMethod method) {
  const int dim = static_cast<int>(a.size());
  if (dim < 1 || dim > 3) throw Error("ww_average: dimension must be 1..3");
  const double k = a.norm();
  if (k == 0.0) return 1.0;
  if (method == AverageMethod::Quadrature) return quadrature(dim, k, n, quad_step);
  return closed_form(dim, k * n);
}

namespace {

void check_inputs(const TorusSystem& ts, const TrigPolynomial& f, const Cocycle& c, double quad_step) {
  if (c.xi.size() != ts.phys_dim()) throw Error("ww_average: cocycle dimension mismatch");
  for (const auto& term : f.terms)
    if (term.q.size() != ts.total_dim()) throw Error("ww_average: term dimension mismatch");
  if (!(quad_step > 0.0)) throw Error("ww_average: quad_step must be positive");
  if (quad_step > max_quad_step(ts, f, c) * (1.0 + 1e-12)) throw Error("ww_average: quadrature step too coarse");
}

std::vector<Complex> term_averages(const TorusSystem& ts, const TrigPolynomial& f, const Cocycle& c, double n,
                                   double quad_step, AverageMethod method) {
  if (!(n > 0.0)) throw Error("ww_average: n must be positive");
  std::vector<Complex> out;
  out.reserve(f.size());
  for (const auto& term : f.terms) out.push_back(ball_average_exp(c.xi - ts.frequency(term.q), n, quad_step, method));
  return out;
}

Complex combine(const TrigPolynomial& f, const std::vector<Complex>& avg, const Vec& omega) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& term = f.terms[i];
    sum += term.coeff * avg[i] * std::polar(1.0, 2.0 * kPi * term.q.cast<double>().dot(omega));
  }
  return sum;
}

}  // namespace

Complex ww_average(const TorusSystem& ts, const TrigPolynomial& f, const Cocycle& c, const Vec& omega, double n,
                   double quad_step, AverageMethod method) {
  check_inputs(ts, f, c, quad_step);
  if (omega.size() != ts.total_dim()) throw Error("ww_average: torus point dimension mismatch");
  return combine(f, term_averages(ts, f, c, n, quad_step, method), omega);
}

TrigPolynomial ww_projection(const TorusSystem& ts, const TrigPolynomial& f, const Cocycle& c) {
  if (c.xi.size() != ts.phys_dim()) throw Error("ww_projection: cocycle dimension mismatch");
  TrigPolynomial out;
  for (const auto& term : f.terms)
    if ((c.xi - ts.frequency(term.q)).cwiseAbs().maxCoeff() <= 1e-10) out.terms.push_back(term);
  return out;
}

std::vector<UniformPoint> ww_uniform_test(const TorusSystem& ts, const TrigPolynomial& f, const Cocycle& c,
                                          const std::vector<Vec>& omega_samples, const std::vector<double>& n_list,
                                          double quad_step, AverageMethod method) {
  if (omega_samples.empty()) throw Error("ww_uniform_test: no torus samples");
  check_inputs(ts, f, c, quad_step);
  const TrigPolynomial proj = ww_projection(ts, f, c);
  std::vector<UniformPoint> out;
  for (double n : n_list) {
    const auto avg = term_averages(ts, f, c, n, quad_step, method);
    double sup = 0.0;
    for (const Vec& omega : omega_samples) {
      if (omega.size() != ts.total_dim()) throw Error("ww_uniform_test: torus point dimension mismatch");
      sup = std::max(sup, std::abs(combine(f, avg, omega) - proj(omega)));
    }
    out.push_back({n, sup});
  }
  return out;
}

std::vector<Vec> omega_grid(int dim, int per_dim) {
  if (dim < 1 || per_dim < 1) throw Error("omega_grid: need dim >= 1 and per_dim >= 1");
  std::vector<Vec> out;
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  while (true) {
    Vec v(dim);
    for (int k = 0; k < dim; ++k) v[k] = static_cast<double>(idx[static_cast<std::size_t>(k)]) / per_dim;
    out.push_back(std::move(v));
    int k = 0;
    while (k < dim && ++idx[static_cast<std::size_t>(k)] >= per_dim) idx[static_cast<std::size_t>(k++)] = 0;
    if (k == dim) break;
  }
  return out;
}

}  // namespace aperiodica
