#include "aperiodica/diffraction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "aperiodica/spatial_grid.hpp"

namespace aperiodica {

namespace {

// Points of the sample within B_smax sorted by norm, with the index ranges
// that fall inside each B_s.
struct ShellIndex {
  Mat points;
  std::vector<std::size_t> counts;  // points with |x| <= s_list[j]
};

ShellIndex shells(const PointSet& p, const std::vector<double>& s_list) {
  const double smax = s_list.back();
  std::vector<std::pair<double, std::size_t>> by_norm;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double r = p.point(i).norm();
    if (r <= smax) by_norm.emplace_back(r, i);
  }
  std::sort(by_norm.begin(), by_norm.end());
  ShellIndex out;
  out.points.resize(p.dim(), static_cast<Eigen::Index>(by_norm.size()));
  for (std::size_t k = 0; k < by_norm.size(); ++k)
    out.points.col(static_cast<Eigen::Index>(k)) = p.point(by_norm[k].second);
  for (double s : s_list) {
    const auto it = std::upper_bound(by_norm.begin(), by_norm.end(), s,
                                     [](double v, const auto& e) { return v < e.first; });
    out.counts.push_back(static_cast<std::size_t>(it - by_norm.begin()));
  }
  return out;
}

std::vector<double> normalize_s(std::vector<double> s_list, const PointSet& p, const char* op) {
  if (s_list.empty()) throw Error(std::string(op) + ": empty s list");
  std::sort(s_list.begin(), s_list.end());
  if (!(s_list.front() > 0.0)) throw Error(std::string(op) + ": s must be positive");
  if (s_list.back() > p.region().origin_depth() * (1.0 + 1e-12))
    throw Error(std::string(op) + ": s exceeds the region radius");
  return s_list;
}

void scan_into(const ShellIndex& sh, const std::vector<double>& s_list, int dim, const std::vector<Vec>& candidates,
               std::vector<Peak>& out, std::size_t begin, std::size_t end) {
  const auto total = static_cast<Eigen::Index>(sh.points.cols());
  for (std::size_t c = begin; c < end; ++c) {
    const Vec& xi = candidates[c];
    Peak peak;
    peak.xi = xi;
    double re = 0.0, im = 0.0;
    std::size_t j = 0;
    for (Eigen::Index k = 0; k <= total; ++k) {
      while (j < s_list.size() && sh.counts[j] == static_cast<std::size_t>(k)) {
        const double vol = ball_volume(dim, s_list[j]);
        peak.bt_sequence.push_back((re * re + im * im) / (vol * vol));
        ++j;
      }
      if (k == total) break;
      const double phase = -xi.dot(sh.points.col(k));
      re += std::cos(phase);
      im += std::sin(phase);
    }
    peak.intensity_bt = peak.bt_sequence.back();
    out[c] = std::move(peak);
  }
}

}  // namespace

Mat rotation_2d(double angle) {
  Mat v(2, 2);
  v << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return v;
}

BTAmplitude bt_amplitude(const PointSet& p, const Vec& xi, double s) {
  if (xi.size() != p.dim()) throw Error("bt_amplitude: frequency dimension mismatch");
  if (!(s > 0.0)) throw Error("bt_amplitude: s must be positive");
  if (s > p.region().origin_depth() * (1.0 + 1e-12)) throw Error("bt_amplitude: s exceeds the region radius");
  const double s2 = s * s;
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vec x = p.point(i);
    if (x.squaredNorm() > s2) continue;
    const double phase = -xi.dot(x);
    re += std::cos(phase);
    im += std::sin(phase);
  }
  const double vol = ball_volume(p.dim(), s);
  return {xi, s, Complex(re, im) / vol};
}

PeakList peak_scan(const PointSet& p, const std::vector<Vec>& candidates, std::vector<double> s_list, int threads) {
  PeakList out;
  s_list = normalize_s(std::move(s_list), p, "peak_scan");
  out.s_list = s_list;
  out.s_used = s_list.back();
  if (candidates.empty()) return out;
  for (const Vec& xi : candidates)
    if (xi.size() != p.dim()) throw Error("peak_scan: candidate dimension mismatch");

  // Norm-sorted shells so that s values with equal point counts report the
  // same partial sum; the order of accumulation differs from bt_amplitude.
  const ShellIndex sh = shells(p, s_list);
  std::vector<Peak> peaks(candidates.size());
  const auto n_threads = static_cast<std::size_t>(std::clamp(threads, 1, 256));
  if (n_threads == 1 || candidates.size() < 2 * n_threads) {
    scan_into(sh, s_list, p.dim(), candidates, peaks, 0, candidates.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (candidates.size() + n_threads - 1) / n_threads;
    for (std::size_t t = 0; t < n_threads; ++t) {
      const std::size_t b = t * chunk;
      const std::size_t e = std::min(candidates.size(), b + chunk);
      if (b >= e) break;
      pool.emplace_back([&, b, e] { scan_into(sh, s_list, p.dim(), candidates, peaks, b, e); });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<std::size_t> order(peaks.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return peaks[a].xi.squaredNorm() < peaks[b].xi.squaredNorm(); });
  out.entries.reserve(peaks.size());
  for (std::size_t i : order) out.entries.push_back(std::move(peaks[i]));
  return out;
}

PeakList module_scan(const PointSet& p, const CutProjectScheme& cps, const FourierModule& module,
                     std::vector<double> s_list, int threads) {
  if (cps.phys_dim() != p.dim()) throw Error("module_scan: scheme and sample dimensions differ");
  std::vector<Vec> candidates;
  candidates.reserve(module.size());
  for (const auto& e : module.elements) candidates.push_back(e.k);
  PeakList out = peak_scan(p, candidates, std::move(s_list), threads);
  // Module elements are already sorted by |k| and peak_scan sorts stably by
  // the same key, so entries line up with the elements.
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    out.entries[i].q_label = module.elements[i].q;
    out.entries[i].intensity_closed = model_set_intensity(cps, module.elements[i]);
  }
  out.k_phys_max = module.k_phys_max;
  out.k_int_max = module.k_int_max;
  return out;
}

std::vector<Vec> grid_candidates(int dim, double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw Error("grid_candidates: need step > 0 and hi >= lo");
  if (dim < 1 || dim > 3) throw Error("grid_candidates: dimension must be 1..3");
  const auto n = static_cast<long long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<Vec> out;
  std::vector<long long> idx(static_cast<std::size_t>(dim), 0);
  while (true) {
    Vec v(dim);
    for (int k = 0; k < dim; ++k) v[k] = lo + static_cast<double>(idx[static_cast<std::size_t>(k)]) * step;
    out.push_back(std::move(v));
    int k = 0;
    while (k < dim && ++idx[static_cast<std::size_t>(k)] >= n) idx[static_cast<std::size_t>(k++)] = 0;
    if (k == dim) break;
  }
  return out;
}

double model_set_intensity(const CutProjectScheme& cps, const ModuleElement& element) {
  const double a = std::abs(window_fourier(cps.window(), element.k_star));
  return a * a / (cps.covolume() * cps.covolume());
}

ConsistencyResult pure_point_consistency(const PointSet& p, const PeakList& peaks, const SmoothingKernel& kernel,
                                         const WeightedComb& comb) {
  const double packing = 0.5 * p.min_distance();
  if (!(kernel.width() < packing))
    throw Error("pure_point_consistency: kernel width must be below the packing radius");
  const double needed = kernel.cutoff_frequency(1e-6);
  double reach = 0.0;
  for (const auto& pk : peaks.entries) reach = std::max(reach, pk.xi.norm());
  if (reach < needed) throw Error("pure_point_consistency: peaks do not reach the kernel cutoff frequency");

  ConsistencyResult out;
  for (std::size_t i = 0; i < comb.size(); ++i) out.lhs += comb.weights[i] * kernel.autocorrelation(comb.support[i]);
  if (!(out.lhs > 0.0)) throw Error("pure_point_consistency: degenerate kernel/comb");
  for (const auto& pk : peaks.entries) {
    const double f = kernel.fourier(pk.xi);
    out.rhs += pk.intensity_bt * f * f;
  }
  out.rel_error = std::abs(out.lhs - out.rhs) / out.lhs;
  return out;
}

double symmetry_check(const PointSet& p, const PeakList& peaks, const Mat& v, double tol) {
  const int d = p.dim();
  if (v.rows() != d || v.cols() != d) throw Error("symmetry_check: matrix dimension mismatch");
  if ((v.transpose() * v - Mat::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10)
    throw Error("symmetry_check: matrix is not orthogonal");
  if (peaks.empty()) return 0.0;

  Mat pos(d, static_cast<Eigen::Index>(peaks.size()));
  for (std::size_t i = 0; i < peaks.size(); ++i) pos.col(static_cast<Eigen::Index>(i)) = peaks.entries[i].xi;
  const CellGrid grid(pos, std::max(tol, 1e-12));
  std::vector<double> other(peaks.size());
  std::vector<Vec> missing;
  std::vector<std::size_t> missing_at;
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    const Vec image = v * peaks.entries[i].xi;
    if (auto j = grid.find(image, tol)) {
      other[i] = peaks.entries[*j].intensity_bt;
    } else {
      missing.push_back(image);
      missing_at.push_back(i);
    }
  }
  if (!missing.empty()) {
    // Same accumulation order as the scan, so that V = -I reproduces the
    // conjugate amplitude bit for bit.
    const ShellIndex sh = shells(p, {peaks.s_used});
    std::vector<Peak> re(missing.size());
    scan_into(sh, {peaks.s_used}, d, missing, re, 0, missing.size());
    for (std::size_t k = 0; k < missing.size(); ++k) other[missing_at[k]] = re[k].intensity_bt;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < peaks.size(); ++i) worst = std::max(worst, std::abs(peaks.entries[i].intensity_bt - other[i]));
  return worst;
}

}  // namespace aperiodica
