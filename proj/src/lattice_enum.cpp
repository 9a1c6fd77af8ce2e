#include "aperiodica/lattice_enum.hpp"

#include <cmath>
#include <vector>

namespace aperiodica {

void enumerate_ellipsoid(const Mat& m, const Vec& center, double radius2,
                         const std::function<void(const IVec&)>& visit) {
  const auto d = m.cols();
  if (m.rows() != d || center.size() != d) throw Error("enumerate_ellipsoid: shape mismatch");
  Eigen::HouseholderQR<Mat> qr(m);
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < d; ++i)
    if (r(i, i) == 0.0) throw Error("enumerate_ellipsoid: singular matrix");

  IVec q(d);
  std::vector<double> partial(static_cast<std::size_t>(d) + 1, 0.0);  // norm^2 used by levels > i

  std::function<void(Eigen::Index)> level = [&](Eigen::Index i) {
    // Row i of R (q - c): r_ii (y_i + sum_{j>i} r_ij / r_ii y_j).
    double shift = 0.0;
    for (Eigen::Index j = i + 1; j < d; ++j) shift += r(i, j) * (static_cast<double>(q[j]) - center[j]);
    const double rii = std::abs(r(i, i));
    const double sgn = r(i, i) > 0 ? 1.0 : -1.0;
    const double mid = center[i] - sgn * shift / rii;
    const double budget = radius2 - partial[static_cast<std::size_t>(i) + 1];
    if (budget < 0.0) return;
    const double half = std::sqrt(budget) / rii;
    const auto lo = static_cast<long long>(std::ceil(mid - half));
    const auto hi = static_cast<long long>(std::floor(mid + half));
    for (long long v = lo; v <= hi; ++v) {
      q[i] = v;
      const double t = r(i, i) * (static_cast<double>(v) - center[i]) + shift;
      partial[static_cast<std::size_t>(i)] = partial[static_cast<std::size_t>(i) + 1] + t * t;
      if (partial[static_cast<std::size_t>(i)] > radius2) continue;
      if (i == 0) {
        visit(q);
      } else {
        level(i - 1);
      }
    }
  };
  if (d > 0) level(d - 1);
}

void enumerate_box_preimage(const Mat& basis, const Vec& lo, const Vec& hi,
                            const std::function<void(const IVec&, const Vec&)>& visit) {
  const auto d = basis.cols();
  // The box sits inside the ellipsoid |D^{-1}(p - c)|^2 <= d with D the
  // half-widths; enumerate that and filter exactly.
  const Vec c = 0.5 * (lo + hi);
  const Vec half = 0.5 * (hi - lo);
  Mat scaled = basis;
  for (Eigen::Index i = 0; i < d; ++i) scaled.row(i) /= half[i];
  const Vec qc = basis.fullPivLu().solve(c);
  const double radius2 = static_cast<double>(d) * (1.0 + 1e-9) + 1e-9;
  enumerate_ellipsoid(scaled, qc, radius2, [&](const IVec& q) {
    const Vec p = basis * q.cast<double>();
    if ((p.array() >= lo.array()).all() && (p.array() <= hi.array()).all()) visit(q, p);
  });
}

}  // namespace aperiodica
