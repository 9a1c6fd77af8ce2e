#include "aperiodica/cps.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "aperiodica/lattice_enum.hpp"

namespace aperiodica {

namespace {

std::string format_q(const IVec& q) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < q.size(); ++i) os << (i ? ", " : "") << q[i];
  os << ')';
  return os.str();
}

bool q_less(const IVec& a, const IVec& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

}  // namespace

CutProjectScheme::CutProjectScheme(int phys_dim, int int_dim, Mat basis, Window window, CheckBounds checks,
                                   std::string name)
    : phys_dim_(phys_dim),
      int_dim_(int_dim),
      basis_(std::move(basis)),
      window_(std::move(window)),
      checks_(checks),
      name_(std::move(name)) {
  if (phys_dim_ < 1 || phys_dim_ > 3) throw Error("cps_new: physical dimension must be 1..3");
  if (int_dim_ < 1) throw Error("cps_new: internal dimension must be at least 1");
  const int d = total_dim();
  if (basis_.rows() != d || basis_.cols() != d) throw Error("cps_new: basis must be square of size N+m");
  if (!basis_.allFinite()) throw Error("cps_new: non-finite basis entry");
  if (window_.dim() != int_dim_) throw Error("cps_new: window dimension must equal internal dimension");

  const double scale = std::max(1e-300, basis_.cwiseAbs().maxCoeff());
  covolume_ = std::abs(basis_.determinant());
  if (!(covolume_ > 1e-12 * std::pow(scale, d))) throw Error("cps_new: singular basis");
  basis_inv_ = basis_.inverse();
  dual_ = 2.0 * kPi * basis_inv_.transpose();

  if (checks_.q_check > 0) {
    const auto side = std::pow(static_cast<double>(checks_.q_check), 1.0 / d);
    const long long qmax = std::max(1LL, static_cast<long long>(std::floor((side - 1.0) / 2.0)));
    auto [blo, bhi] = window_.bounding_box();
    const double extent = (bhi - blo).maxCoeff();
    const double delta = checks_.delta_dense > 0.0 ? checks_.delta_dense : extent / 8.0;
    std::vector<long long> cells(static_cast<std::size_t>(int_dim_));
    long long n_cells = 1;
    for (int j = 0; j < int_dim_; ++j) {
      cells[static_cast<std::size_t>(j)] = std::max(1LL, static_cast<long long>(std::ceil((bhi[j] - blo[j]) / delta)));
      n_cells *= cells[static_cast<std::size_t>(j)];
    }
    std::set<long long> hit;
    IVec q = IVec::Constant(d, -qmax);
    while (true) {
      if (!q.isZero()) {
        const Vec p = basis_ * q.cast<double>();
        if (p.head(phys_dim_).norm() < checks_.eps_inj)
          throw Error("cps_new: injectivity witness failed for q = " + format_q(q));
        const Vec y = p.tail(int_dim_);
        long long flat = 0;
        bool inside = true;
        for (int j = 0; j < int_dim_ && inside; ++j) {
          const double u = (y[j] - blo[j]) / delta;
          if (u < 0.0 || u >= static_cast<double>(cells[static_cast<std::size_t>(j)])) inside = false;
          flat = flat * cells[static_cast<std::size_t>(j)] + static_cast<long long>(std::floor(u));
        }
        if (inside) hit.insert(flat);
      }
      int k = 0;
      while (k < d && ++q[k] > qmax) q[k++] = -qmax;
      if (k == d) break;
    }
    if (static_cast<long long>(hit.size()) < n_cells) {
      std::ostringstream os;
      os << "internal projection not dense: " << hit.size() << " of " << n_cells
         << " window cells reached at resolution " << delta;
      warnings_.push_back(os.str());
    }
  }
  if (!window_.regular())
    warnings_.push_back("window not flagged regular: boundary may carry positive measure; no diffraction claims");
}

std::pair<Vec, Vec> CutProjectScheme::star_map(const IVec& q) const {
  if (q.size() != total_dim()) throw Error("star_map: label dimension mismatch");
  const Vec p = basis_ * q.cast<double>();
  return {p.head(phys_dim_), p.tail(int_dim_)};
}

CutProjectScheme CutProjectScheme::with_window(Window w) const {
  return CutProjectScheme(phys_dim_, int_dim_, basis_, std::move(w), checks_, name_);
}

CutProjectScheme builtin_scheme(std::string_view name) {
  if (name == "fibonacci") {
    const double tau = 0.5 * (1.0 + std::sqrt(5.0));
    const double tau_c = 0.5 * (1.0 - std::sqrt(5.0));
    Mat b(2, 2);
    b << 1.0, tau, 1.0, tau_c;
    return CutProjectScheme(1, 1, b, Window::interval(-1.0, tau - 1.0), {}, "fibonacci");
  }
  if (name == "octagonal") {
    Mat b(4, 4);
    for (int j = 0; j < 4; ++j) {
      b(0, j) = std::cos(j * kPi / 4.0);
      b(1, j) = std::sin(j * kPi / 4.0);
      b(2, j) = std::cos(3.0 * j * kPi / 4.0);
      b(3, j) = std::sin(3.0 * j * kPi / 4.0);
    }
    // Regular octagon of edge length 1: edge normals along the internal
    // basis directions, apothem (1 + sqrt 2) / 2.
    const double apothem = 0.5 * (1.0 + std::sqrt(2.0));
    const double circumradius = apothem / std::cos(kPi / 8.0);
    return CutProjectScheme(2, 2, b, Window::regular_polygon(8, circumradius, kPi / 8.0), {}, "octagonal");
  }
  throw Error("builtin: unknown scheme '" + std::string(name) + "'");
}

PointSet model_set_points(const CutProjectScheme& cps, double region_radius) {
  return model_set_points(cps, region_radius, Vec::Zero(cps.phys_dim()), Vec::Zero(cps.int_dim()));
}

PointSet model_set_points(const CutProjectScheme& cps, double region_radius, const Vec& t, const Vec& h) {
  if (!(region_radius > 0.0)) throw Error("model_set_points: region radius must be positive");
  const int n = cps.phys_dim();
  const int m = cps.int_dim();
  if (t.size() != n || h.size() != m) throw Error("model_set_points: shift dimension mismatch");
  auto [wlo, whi] = cps.window().bounding_box();
  Vec lo(n + m), hi(n + m);
  lo.head(n) = -t.array() - region_radius;
  hi.head(n) = -t.array() + region_radius;
  lo.tail(m) = wlo - h;
  hi.tail(m) = whi - h;

  const double r2 = region_radius * region_radius * (1.0 + 1e-12);
  std::vector<std::pair<Vec, IVec>> found;
  enumerate_box_preimage(cps.basis(), lo, hi, [&](const IVec& q, const Vec& p) {
    const Vec x = p.head(n) + t;
    if (x.squaredNorm() > r2) return;
    if (!cps.window().contains(p.tail(m) + h)) return;
    found.emplace_back(x, q);
  });
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    for (Eigen::Index i = 0; i < a.first.size(); ++i)
      if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
    return q_less(a.second, b.second);
  });

  Mat pts(n, static_cast<Eigen::Index>(found.size()));
  IMat labels(n + m, static_cast<Eigen::Index>(found.size()));
  for (std::size_t i = 0; i < found.size(); ++i) {
    pts.col(static_cast<Eigen::Index>(i)) = found[i].first;
    labels.col(static_cast<Eigen::Index>(i)) = found[i].second;
  }
  std::ostringstream meta;
  meta.precision(17);
  meta << "model set " << (cps.name().empty() ? "custom" : cps.name()) << " radius " << region_radius;
  if (found.empty()) meta << " (warning: window misses the projected lattice; empty set)";
  return PointSet(std::move(pts), Region::ball(n, region_radius), std::move(labels), meta.str());
}

FourierModule fourier_module(const CutProjectScheme& cps, double k_phys_max, double k_int_max) {
  if (!(k_phys_max > 0.0) || !(k_int_max > 0.0)) throw Error("fourier_module: cutoffs must be positive");
  const int n = cps.phys_dim();
  const int m = cps.int_dim();
  Vec lo(n + m), hi(n + m);
  lo.head(n).setConstant(-k_phys_max);
  hi.head(n).setConstant(k_phys_max);
  lo.tail(m).setConstant(-k_int_max);
  hi.tail(m).setConstant(k_int_max);

  FourierModule out;
  out.dual_basis = cps.dual_basis();
  out.k_phys_max = k_phys_max;
  out.k_int_max = k_int_max;
  const double kp2 = k_phys_max * k_phys_max;
  const double ki2 = k_int_max * k_int_max;
  enumerate_box_preimage(out.dual_basis, lo, hi, [&](const IVec& q, const Vec& p) {
    if (p.head(n).squaredNorm() > kp2 || p.tail(m).squaredNorm() > ki2) return;
    out.elements.push_back({q, p.head(n), p.tail(m)});
  });
  std::sort(out.elements.begin(), out.elements.end(), [](const ModuleElement& a, const ModuleElement& b) {
    const double na = a.k.squaredNorm();
    const double nb = b.k.squaredNorm();
    if (na != nb) return na < nb;
    return q_less(a.q, b.q);
  });
  return out;
}

}  // namespace aperiodica
