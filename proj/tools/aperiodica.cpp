#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "aperiodica/autocorr.hpp"
#include "aperiodica/diffraction.hpp"
#include "aperiodica/hull.hpp"
#include "aperiodica/io.hpp"
#include "aperiodica/patches.hpp"
#include "aperiodica/sequences.hpp"
#include "aperiodica/svg.hpp"

using namespace aperiodica;

namespace {

// Invalid configuration: exit 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string builtin, scheme, sequence, lengths, points, other, terms, out, svg, estimator = "anchored";
  std::string s_list, xi, method = "closed";
  double radius = 0.0, s_avg = 0.0, kmax = 0.0, kintmax = 0.0, grid_step = 0.0, n = 0.0, s_max = 0.0;
  double patch_radius = 0.0, eps_grid = 1e-3, nmax = 1000.0, quad_step = 0.0;
  int order = 0, top = 0, omega_per_dim = 0, threads = 0;
  std::optional<std::uint64_t> seed;
  bool reproducible = false;
};

std::vector<double> parse_list(const std::string& s, const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(std::string("bad number in ") + what + ": '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError(std::string(what) + " is empty");
  return out;
}

std::map<int, double> parse_lengths(const std::string& s) {
  std::map<int, double> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto eq = item.find('=');
    if (eq != 1) throw ConfigError("--lengths expects letter=length pairs, got '" + item + "'");
    out[static_cast<unsigned char>(item[0])] = parse_list(item.substr(2), "--lengths").front();
  }
  return out;
}

int source_count(const Options& o) {
  return !o.builtin.empty() + !o.scheme.empty() + !o.sequence.empty() + !o.points.empty();
}

void require_one_source(const Options& o) {
  const int n = source_count(o);
  if (n == 0) throw ConfigError("no point source: give one of --builtin, --scheme, --sequence, --points");
  if (n > 1) throw ConfigError("more than one point source given");
}

std::optional<CutProjectScheme> load_cps(const Options& o) {
  try {
    if (!o.builtin.empty()) return builtin_scheme(o.builtin);
    if (!o.scheme.empty()) return load_scheme(o.scheme);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return std::nullopt;
}

double letters_needed(double radius, const std::map<int, double>& lengths) {
  double shortest = std::numeric_limits<double>::infinity();
  for (const auto& [k, v] : lengths) shortest = std::min(shortest, v);
  return std::ceil(radius / shortest) + 4.0;
}

PointSet sequence_points(const Options& o) {
  if (!(o.radius > 0.0)) throw ConfigError("--sequence needs --radius");
  const double tau = 0.5 * (1.0 + std::sqrt(5.0));
  std::map<int, double> lengths = o.lengths.empty() ? std::map<int, double>{{'a', tau}, {'b', 1.0}} : parse_lengths(o.lengths);
  Word w;
  if (o.sequence == "fibonacci") {
    w = fibonacci_word(static_cast<std::size_t>(letters_needed(o.radius, lengths)));
  } else if (o.sequence == "random") {
    if (!o.seed) throw ConfigError("--sequence random needs --seed");
    std::vector<int> letters;
    std::vector<double> probs;
    for (const auto& [k, v] : lengths) {
      letters.push_back(k);
      probs.push_back(1.0 / static_cast<double>(lengths.size()));
    }
    w = random_word(letters, probs, static_cast<std::size_t>(letters_needed(o.radius, lengths)), *o.seed);
  } else {
    w = Word::parse(o.sequence);
  }
  for (int s : w.symbols)
    if (!lengths.count(s)) throw ConfigError(std::string("no length for letter '") + static_cast<char>(s) + "'");
  PointSet p = seq_to_delone(w, lengths);
  if (p.region().origin_depth() < o.radius) throw ConfigError("sequence does not cover --radius around 0");
  return crop(p, Region::ball(1, o.radius));
}

PointSet load_source(const Options& o, const std::optional<CutProjectScheme>& cps) {
  if (cps) {
    if (!(o.radius > 0.0)) throw ConfigError("--radius must be positive");
    return model_set_points(*cps, o.radius);
  }
  if (!o.sequence.empty()) return sequence_points(o);
  try {
    PointSet p = load_points(o.points);
    if (o.radius > 0.0) return crop(p, Region::ball(p.dim(), o.radius));
    return p;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  return out;
}

Config collect_config(const CLI::App* sub) {
  Config cfg;
  cfg.emplace_back("command", sub->get_name());
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_name() == "--help" || opt->get_name() == "-h") continue;
    std::string value;
    if (opt->count() > 0) {
      for (const auto& r : opt->results()) value += (value.empty() ? "" : " ") + r;
      if (value.empty()) value = "true";
    } else {
      value = opt->get_default_str();
      if (value.empty()) continue;
    }
    cfg.emplace_back(opt->get_name(), value);
  }
  return cfg;
}

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("APERIODICA_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

std::vector<Vec> scan_grid(int dim, double kmax, double step) {
  if (dim == 1) return grid_candidates(1, 0.0, kmax, step);
  return grid_candidates(dim, -kmax, kmax, step);
}

struct Runner {
  Options o;
  const CLI::App* sub = nullptr;

  void header(std::ostream& os) const { write_csv_header(os, collect_config(sub), o.reproducible); }

  std::optional<CutProjectScheme> setup() {
    require_one_source(o);
    if (o.out.empty()) throw ConfigError("--out is required");
    return load_cps(o);
  }

  void gen() {
    auto cps = setup();
    PointSet p = load_source(o, cps);
    auto out = open_out(o.out);
    write_points(out, p);
  }

  void patches() {
    auto cps = setup();
    std::vector<double> s = o.s_list.empty() ? std::vector<double>{o.patch_radius} : parse_list(o.s_list, "--s-list");
    for (double v : s)
      if (!(v > 0.0)) throw ConfigError("patch radii must be positive (--patch-radius or --s-list)");
    PointSet p = load_source(o, cps);
    std::vector<PatchCensus> censuses;
    for (double v : s) censuses.push_back(patch_census(p, v));
    auto out = open_out(o.out);
    header(out);
    write_census_csv(out, censuses);
  }

  void entropy() {
    auto cps = setup();
    if (o.s_list.empty()) throw ConfigError("--s-list is required");
    auto s = parse_list(o.s_list, "--s-list");
    PointSet p = load_source(o, cps);
    auto pts = entropy_estimate(p, s);
    auto out = open_out(o.out);
    header(out);
    write_entropy_csv(out, pts);
  }

  void autocorrelation() {
    auto cps = setup();
    if (!(o.n > 0.0) || !(o.s_max >= 0.0)) throw ConfigError("--n must be positive and --s-max nonnegative");
    Estimator est;
    try {
      est = estimator_from_string(o.estimator);
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
    PointSet p = load_source(o, cps);
    auto comb = autocorr(p, o.n, o.s_max, est);
    auto out = open_out(o.out);
    header(out);
    write_autocorr_csv(out, comb);
  }

  PeakList scan(const PointSet& p, const std::optional<CutProjectScheme>& cps, int threads) const {
    const double s = o.s_avg > 0.0 ? o.s_avg : p.region().origin_depth();
    if (o.grid_step > 0.0) {
      if (!(o.kmax > 0.0)) throw ConfigError("--grid-step needs --kmax");
      PeakList pl = peak_scan(p, scan_grid(p.dim(), o.kmax, o.grid_step), {s}, threads);
      pl.grid_step = o.grid_step;
      return pl;
    }
    if (!cps) throw ConfigError("without a scheme, diffraction needs --grid-step and --kmax");
    if (!(o.kmax > 0.0) || !(o.kintmax > 0.0)) throw ConfigError("--kmax and --kintmax must be positive");
    return module_scan(p, *cps, fourier_module(*cps, o.kmax, o.kintmax), {s}, threads);
  }

  void diffract() {
    auto cps = setup();
    const int threads = resolve_threads(o.threads);
    PointSet p = load_source(o, cps);
    PeakList pl = scan(p, cps, threads);
    auto out = open_out(o.out);
    header(out);
    write_peaks_csv(out, pl, p.dim());
    if (!o.svg.empty()) {
      auto svg = open_out(o.svg);
      svg << peaks_svg(pl, p.dim());
    }
  }

  void symmetry() {
    auto cps = setup();
    if (o.order < 1) throw ConfigError("--order must be at least 1");
    const int threads = resolve_threads(o.threads);
    PointSet p = load_source(o, cps);
    Mat v;
    if (p.dim() == 1) {
      if (o.order != 1 && o.order != 2) throw ConfigError("in 1D only --order 1 or 2 exist");
      v = Mat::Identity(1, 1) * (o.order == 2 ? -1.0 : 1.0);
    } else if (p.dim() == 2) {
      v = rotation_2d(2.0 * kPi / o.order);
    } else {
      if (o.order != 1 && o.order != 2) throw ConfigError("in 3D only --order 1 or 2 (inversion) are supported");
      v = Mat::Identity(3, 3) * (o.order == 2 ? -1.0 : 1.0);
    }
    PeakList pl = scan(p, cps, threads);
    std::stable_sort(pl.entries.begin(), pl.entries.end(),
                     [](const Peak& a, const Peak& b) { return a.intensity_bt > b.intensity_bt; });
    if (o.top > 0 && pl.entries.size() > static_cast<std::size_t>(o.top)) pl.entries.resize(static_cast<std::size_t>(o.top));
    const double imax = pl.empty() ? 0.0 : pl.entries.front().intensity_bt;
    const double disc = symmetry_check(p, pl, v, 1e-9 * (1.0 + o.kmax));
    auto out = open_out(o.out);
    header(out);
    out << "order,peaks,max_intensity,max_discrepancy,relative\n";
    out << o.order << ',' << pl.size() << ',' << format_number(imax) << ',' << format_number(disc) << ','
        << format_number(imax > 0.0 ? disc / imax : 0.0) << '\n';
  }

  void hulldist() {
    auto cps = setup();
    if (o.other.empty()) throw ConfigError("--other <point file> is required");
    PointSet a = load_source(o, cps);
    PointSet b = [&] {
      try {
        return load_points(o.other);
      } catch (const Error& e) {
        throw ConfigError(e.what());
      }
    }();
    const double d = hull_metric(a, b, o.eps_grid);
    auto out = open_out(o.out);
    header(out);
    out << "eps_grid,distance\n" << format_number(o.eps_grid) << ',' << format_number(d) << '\n';
  }

  void ww() {
    auto cps = setup();
    if (!cps) throw ConfigError("ww needs --builtin or --scheme");
    if (o.terms.empty()) throw ConfigError("--terms is required");
    if (o.xi.empty()) throw ConfigError("--xi is required");
    TrigPolynomial f;
    try {
      f = load_terms(o.terms);
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
    auto xi = parse_list(o.xi, "--xi");
    if (static_cast<int>(xi.size()) != cps->phys_dim()) throw ConfigError("--xi needs phys_dim components");
    if (!(o.nmax >= 1.0)) throw ConfigError("--nmax must be at least 1");
    AverageMethod method;
    if (o.method == "closed") method = AverageMethod::ClosedForm;
    else if (o.method == "quadrature") method = AverageMethod::Quadrature;
    else throw ConfigError("--method is closed or quadrature");

    TorusSystem ts(*cps);
    Cocycle c{Eigen::Map<Vec>(xi.data(), static_cast<Eigen::Index>(xi.size()))};
    std::vector<double> n_list;
    for (double n = 1.0; n < o.nmax; n *= 10.0) n_list.push_back(n);
    n_list.push_back(o.nmax);
    const double step = o.quad_step > 0.0 ? o.quad_step : max_quad_step(ts, f, c);
    int per_dim = o.omega_per_dim;
    if (per_dim <= 0)
      per_dim = std::min(100, static_cast<int>(std::floor(std::pow(1e6, 1.0 / ts.total_dim()) + 1e-9)));
    auto pts = ww_uniform_test(ts, f, c, omega_grid(ts.total_dim(), per_dim), n_list, step, method);
    auto out = open_out(o.out);
    header(out);
    write_ww_csv(out, pts);
  }
};

void add_source(CLI::App* sub, Options& o) {
  sub->add_option("--builtin", o.builtin, "builtin scheme: fibonacci | octagonal");
  sub->add_option("--scheme", o.scheme, "scheme JSON file");
  sub->add_option("--sequence", o.sequence, "fibonacci | random | marked word such as ab|aab");
  sub->add_option("--lengths", o.lengths, "tile lengths, e.g. a=1.618,b=1 (default a=tau,b=1)");
  sub->add_option("--points", o.points, "point file");
  sub->add_option("--radius", o.radius, "sample radius");
  sub->add_option("--seed", o.seed, "seed for random sources");
  sub->add_option("--out", o.out, "output file");
  sub->add_flag("--reproducible", o.reproducible, "omit the timestamp comment");
  sub->add_option("--threads", o.threads, "worker threads (fallback: APERIODICA_THREADS)");
}

void add_scan(CLI::App* sub, Options& o) {
  sub->add_option("--s-avg", o.s_avg, "averaging radius (default: sample radius)");
  sub->add_option("--kmax", o.kmax, "physical frequency cutoff");
  sub->add_option("--kintmax", o.kintmax, "internal frequency cutoff");
  sub->add_option("--grid-step", o.grid_step, "uniform grid scan step (instead of the Fourier module)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aperiodica: aperiodic point sets, patch statistics and diffraction"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  Runner run;
  Options& o = run.o;

  auto* gen = app.add_subcommand("gen", "write a point file");
  add_source(gen, o);
  auto* pat = app.add_subcommand("patches", "patch census");
  add_source(pat, o);
  pat->add_option("--patch-radius", o.patch_radius, "patch radius S");
  pat->add_option("--s-list", o.s_list, "comma-separated patch radii");
  auto* ent = app.add_subcommand("entropy", "patch counting entropy");
  add_source(ent, o);
  ent->add_option("--s-list", o.s_list, "comma-separated patch radii");
  auto* ac = app.add_subcommand("autocorr", "autocorrelation coefficients");
  add_source(ac, o);
  ac->add_option("--n", o.n, "averaging radius");
  ac->add_option("--s-max", o.s_max, "largest |z|");
  ac->add_option("--estimator", o.estimator, "anchored | pairs-in-ball")->capture_default_str();
  auto* dif = app.add_subcommand("diffract", "Bragg peak scan");
  add_source(dif, o);
  add_scan(dif, o);
  dif->add_option("--svg", o.svg, "SVG plot file");
  auto* sym = app.add_subcommand("symmetry", "diffraction symmetry check");
  add_source(sym, o);
  add_scan(sym, o);
  sym->add_option("--order", o.order, "rotation by 2 pi / order (2 = inversion)")->required();
  sym->add_option("--top", o.top, "use the strongest peaks only");
  auto* hd = app.add_subcommand("hulldist", "hull metric between two samples");
  add_source(hd, o);
  hd->add_option("--other", o.other, "second point file");
  hd->add_option("--eps-grid", o.eps_grid, "bisection resolution")->capture_default_str();
  auto* ww = app.add_subcommand("ww", "Wiener/Wintner uniform convergence test");
  add_source(ww, o);
  ww->add_option("--xi", o.xi, "cocycle frequency, comma-separated");
  ww->add_option("--terms", o.terms, "trigonometric polynomial JSON");
  ww->add_option("--nmax", o.nmax, "largest averaging radius")->capture_default_str();
  ww->add_option("--quad-step", o.quad_step, "quadrature step (default: largest allowed)");
  ww->add_option("--method", o.method, "closed | quadrature")->capture_default_str();
  ww->add_option("--omega-per-dim", o.omega_per_dim, "torus grid points per dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    for (auto* sub : app.get_subcommands()) {
      run.sub = sub;
      const std::string name = sub->get_name();
      if (name == "gen") run.gen();
      else if (name == "patches") run.patches();
      else if (name == "entropy") run.entropy();
      else if (name == "autocorr") run.autocorrelation();
      else if (name == "diffract") run.diffract();
      else if (name == "symmetry") run.symmetry();
      else if (name == "hulldist") run.hulldist();
      else if (name == "ww") run.ww();
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
