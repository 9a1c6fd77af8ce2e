// One PASS/FAIL line per criterion; exit status is nonzero when any fails.
#define DOCTEST_CONFIG_IMPLEMENT
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "aperiodica/autocorr.hpp"
#include "aperiodica/diffraction.hpp"
#include "aperiodica/hull.hpp"
#include "aperiodica/patches.hpp"
#include "aperiodica/sequences.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace aperiodica;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const double kTau = testing::kTau;

void lattice_peaks() {
  const auto t0 = Clock::now();
  auto z = testing::lattice_1d(2000.0);
  auto cand = grid_candidates(1, 0.0, 10.0, 0.01);
  for (int k = 0; k < 4; ++k) cand.push_back(testing::vec({2.0 * kPi * k}));
  auto pl = peak_scan(z, cand, {2000.0});
  double worst_on = 0.0, worst_off = 0.0;
  for (const auto& e : pl.entries) {
    const double d = std::abs(std::remainder(e.xi[0], 2.0 * kPi));
    if (d < 1e-12) worst_on = std::max(worst_on, std::abs(e.intensity_bt - 1.0));
    if (d > 0.05) worst_off = std::max(worst_off, e.intensity_bt);
  }
  const double t = seconds_since(t0);
  report(1, worst_on <= 0.01 && worst_off <= 0.01 && t < 10.0,
         fmt("max |I-1| at 2pi k = %.3g, max off-peak I = %.3g, %.2f s", worst_on, worst_off, t));
}

void bombieri_taylor() {
  const auto t0 = Clock::now();
  auto fib = builtin_scheme("fibonacci");
  auto p = model_set_points(fib, 1e4);
  auto module = fourier_module(fib, 40.0, 30.0);
  auto pl = module_scan(p, fib, module, {1e4});
  auto e = pl.entries;
  std::stable_sort(e.begin(), e.end(), [](const Peak& a, const Peak& b) { return *a.intensity_closed > *b.intensity_closed; });
  const double a0 = fib.density() * fib.density();
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) worst = std::max(worst, std::abs(e[static_cast<std::size_t>(i)].intensity_bt - *e[static_cast<std::size_t>(i)].intensity_closed) / a0);
  IVec q(2);
  q << -1, -3;
  const auto ext = std::find_if(module.elements.begin(), module.elements.end(), [&](const ModuleElement& m) { return m.q == q; });
  if (ext == module.elements.end()) {
    report(2, false, "extinct module element missing from the scan");
    return;
  }
  const double closed = model_set_intensity(fib, *ext);
  const double measured = std::norm(bt_amplitude(p, ext->k, 1e4).value);
  const double t = seconds_since(t0);
  report(2, worst <= 5e-2 && closed < 1e-20 && measured <= 1e-3 && t < 30.0,
         fmt("top-10 max rel error %.3g, extinct q=(-1,-3): A_k = %.1e, measured %.2e, %.2f s", worst, closed, measured, t));
}

void closed_autocorrelation() {
  auto fib = builtin_scheme("fibonacci");
  auto p = model_set_points(fib, 1e4 + 6.0);
  auto comb = autocorr(p, 1e4, 5.0, Estimator::Anchored);
  double worst = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < comb.size(); ++i) {
    if (comb.support[i].norm() > 5.0) continue;
    worst = std::max(worst, std::abs(comb.weights[i] - overlap_oracle(fib, from_key(comb.keys[i]))));
    ++count;
  }
  report(3, count > 0 && worst <= 1e-2, fmt("%zu differences, max |c_z - oracle| = %.3g", count, worst));
}

void entropy() {
  const std::vector<double> s_list{5.0, 10.0, 20.0, 40.0};
  auto fib = builtin_scheme("fibonacci");
  auto p = model_set_points(fib, 3000.0);
  auto ef = entropy_estimate(p, s_list);
  auto w = random_word({'a', 'b'}, {1.0 / kTau, 1.0 / (kTau * kTau)}, 2000, 7);
  auto r = seq_to_delone(w, {{'a', kTau}, {'b', 1.0}});
  auto er = entropy_estimate(r, s_list);
  bool decreasing = true;
  for (std::size_t i = 1; i < ef.size(); ++i) decreasing = decreasing && ef[i].entropy_density < ef[i - 1].entropy_density;
  const double final_value = ef.back().entropy_density;
  bool control = true;
  for (const auto& e : er) control = control && e.entropy_density >= 10.0 * final_value;
  // Sturmian check on the gap word.
  auto gaps = gap_word(model_set_points(fib, 400.0));
  auto cx = factor_complexity(gaps.word.symbols, 20);
  bool sturmian = cx.size() == 20;
  for (std::size_t n = 1; n <= cx.size(); ++n) sturmian = sturmian && cx[n - 1] == n + 1;
  std::string detail = "fibonacci N(S):";
  for (const auto& e : ef) detail += fmt(" %zu", e.n_patches);
  detail += " h:";
  for (const auto& e : ef) detail += fmt(" %.3f", e.entropy_density);
  detail += " random h:";
  for (const auto& e : er) detail += fmt(" %.3f", e.entropy_density);
  detail += fmt(" decreasing=%d final<=0.02=%d control=%d sturmian(n<=20)=%d", decreasing, final_value <= 0.02, control,
                sturmian);
  report(4, decreasing && final_value <= 0.02 && control && sturmian, detail);
}

void octagonal_symmetry() {
  auto oct = builtin_scheme("octagonal");
  auto p = model_set_points(oct, 200.0);
  auto module = fourier_module(oct, 12.0, 6.0);
  auto pl = module_scan(p, oct, module, {200.0}, 4);
  std::stable_sort(pl.entries.begin(), pl.entries.end(),
                   [](const Peak& a, const Peak& b) { return a.intensity_bt > b.intensity_bt; });
  pl.entries.resize(std::min<std::size_t>(20, pl.entries.size()));
  const double imax = pl.entries.front().intensity_bt;
  const double rot = symmetry_check(p, pl, rotation_2d(kPi / 4.0), 1e-9);
  const double inv = symmetry_check(p, pl, -Mat::Identity(2, 2), 1e-9);
  report(5, rot <= 5e-2 * imax && inv == 0.0,
         fmt("rotation pi/4 discrepancy %.3g of max intensity, -I discrepancy %.3g", rot / imax, inv));
}

void pure_point() {
  const double s = 2000.0;
  auto fib = builtin_scheme("fibonacci");
  SmoothingKernel kernel(SmoothingKernel::Shape::Triangular, 0.2);
  auto module = fourier_module(fib, kernel.cutoff_frequency(1e-6) * 1.05, 200.0);
  auto p = model_set_points(fib, 2.0 * s + 10.0);
  auto fr = pure_point_consistency(p, module_scan(p, fib, module, {s}, 4), kernel, autocorr(p, s, 1.0));

  std::vector<Vec> cand;
  for (const auto& m : module.elements) cand.push_back(m.k);
  auto w = random_word({'a', 'b'}, {1.0 / kTau, 1.0 / (kTau * kTau)}, static_cast<std::size_t>(3 * s), 42);
  auto r = seq_to_delone(w, {{'a', kTau}, {'b', 1.0}});
  auto rr = pure_point_consistency(r, peak_scan(r, cand, {s}, 4), kernel, autocorr(r, s, 1.0));
  report(6, fr.rel_error <= 5e-2 && rr.rel_error > 4.0 * fr.rel_error,
         fmt("fibonacci rel_error %.3g, random tiling rel_error %.3g (%s 0.2)", fr.rel_error, rr.rel_error,
             rr.rel_error >= 0.2 ? ">=" : "<"));
}

void wiener_wintner() {
  auto fib = builtin_scheme("fibonacci");
  TorusSystem ts(fib);
  TrigPolynomial f;
  IVec q(2);
  q << 1, 0;
  f.terms.push_back({q, Complex(1.0, 0.0)});
  q << 0, 1;
  f.terms.push_back({q, Complex(0.5, 0.2)});
  q << 1, 1;
  f.terms.push_back({q, Complex(0.3, 0.0)});
  const auto omegas = omega_grid(2, 100);
  const std::vector<double> ns{10.0, 100.0, 1000.0};

  // Non-resonant: the deviation decays like C / n with C = Σ |c_q| / |ξ - ν_q|.
  Cocycle off{testing::vec({1.0})};
  double bound = 0.0;
  for (const auto& t : f.terms) bound += std::abs(t.coeff) / std::abs(1.0 - ts.frequency(t.q)[0]);
  const double h = max_quad_step(ts, f, off);
  auto closed = ww_uniform_test(ts, f, off, omegas, ns, h, AverageMethod::ClosedForm);
  auto quad = ww_uniform_test(ts, f, off, omegas, ns, h, AverageMethod::Quadrature);
  double worst_scaled = 0.0, worst_agree = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    worst_scaled = std::max(worst_scaled, closed[i].sup_dev * ns[i]);
    worst_agree = std::max(worst_agree, std::abs(closed[i].sup_dev - quad[i].sup_dev));
  }
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, omegas.size() - 1);
  for (double n : ns)
    for (int j = 0; j < 20; ++j) {
      const Vec& w = omegas[pick(rng)];
      worst_agree = std::max(worst_agree, std::abs(ww_average(ts, f, off, w, n, h, AverageMethod::ClosedForm) -
                                                   ww_average(ts, f, off, w, n, h, AverageMethod::Quadrature)));
    }

  // Resonant with the first term: that component converges exactly, the rest
  // decays like the non-resonant case.
  Cocycle on{ts.frequency(f.terms[0].q)};
  TrigPolynomial single;
  single.terms.push_back(f.terms[0]);
  const double hr = max_quad_step(ts, f, on);
  double res_single = 0.0, res_scaled = 0.0, res_bound = 0.0;
  for (std::size_t i = 1; i < f.size(); ++i)
    res_bound += std::abs(f.terms[i].coeff) / std::abs(on.xi[0] - ts.frequency(f.terms[i].q)[0]);
  for (auto method : {AverageMethod::ClosedForm, AverageMethod::Quadrature}) {
    for (const auto& u : ww_uniform_test(ts, single, on, omegas, ns, hr, method)) res_single = std::max(res_single, u.sup_dev);
    for (const auto& u : ww_uniform_test(ts, f, on, omegas, ns, hr, method)) res_scaled = std::max(res_scaled, u.sup_dev * u.n);
  }
  const bool ok = worst_scaled <= bound && worst_agree <= 1e-8 && res_single <= 1e-6 && res_scaled <= res_bound + 1e-6;
  report(7, ok,
         fmt("non-resonant max n*sup_dev %.3g (bound %.3g), closed vs quadrature %.2e; resonant term sup_dev %.2e, "
             "full n*sup_dev %.3g (bound %.3g); %zu omegas",
             worst_scaled, bound, worst_agree, res_single, res_scaled, res_bound, omegas.size()));
}

void hull() {
  const double eps = 1e-3;
  auto z = testing::lattice_1d(1100.0);
  auto zs = testing::lattice_1d(1100.0, 0.1);
  const double d = hull_metric(z, zs, eps);
  const bool symmetric = hull_metric(zs, z, eps) == d;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double cap = 1.0 / std::sqrt(2.0);
  double worst_triangle = -1.0, largest = 0.0;
  bool sym_all = symmetric;
  for (int c = 0; c < 100; ++c) {
    auto a = testing::lattice_1d(1100.0, u(rng));
    auto b = testing::lattice_1d(1100.0, u(rng));
    auto e = testing::lattice_1d(1100.0, u(rng));
    const double ab = hull_metric(a, b, eps), be = hull_metric(b, e, eps), ae = hull_metric(a, e, eps);
    sym_all = sym_all && hull_metric(b, a, eps) == ab;
    worst_triangle = std::max(worst_triangle, ae - ab - be);
    largest = std::max({largest, ab, be, ae});
  }
  report(8, std::abs(d - 0.05) <= eps && sym_all && worst_triangle <= 2.0 * eps && largest <= cap,
         fmt("d(Z, Z+0.1) = %.5f, symmetric=%d, worst triangle excess %.2e, largest %.4f", d, sym_all, worst_triangle,
             largest));
}

void invariants() {
  doctest::Context ctx;
  ctx.setOption("test-case", "property:*");
  ctx.setOption("no-intro", true);
  ctx.setOption("no-version", true);
  ctx.setOption("minimal", true);
  const int rc = ctx.run();
  report(9, rc == 0, rc == 0 ? "all property suites passed" : "property failures, see doctest output above");
}

}  // namespace

int main() {
  lattice_peaks();
  bombieri_taylor();
  closed_autocorrelation();
  entropy();
  octagonal_symmetry();
  pure_point();
  wiener_wintner();
  hull();
  invariants();
  return failures == 0 ? 0 : 1;
}
