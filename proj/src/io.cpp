#include "aperiodica/io.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace aperiodica {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

double to_double(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw Error(std::string("read_points: bad number in ") + what + ": '" + s + "'");
  return v;
}

Region parse_region(const std::vector<std::string>& tok, int dim) {
  // tok: ball S [center ..] | box h.. [center ..]
  if (tok.empty()) throw Error("read_points: missing region");
  std::size_t i = 1;
  Region r;
  if (tok[0] == "ball") {
    if (tok.size() < 2) throw Error("read_points: ball region needs a radius");
    r = Region::ball(dim, to_double(tok[1], "region"));
    i = 2;
  } else if (tok[0] == "box") {
    if (tok.size() < 1 + static_cast<std::size_t>(dim)) throw Error("read_points: box region needs half-widths");
    Vec hw(dim);
    for (int k = 0; k < dim; ++k) hw[k] = to_double(tok[1 + static_cast<std::size_t>(k)], "region");
    r = Region::box(hw);
    i = 1 + static_cast<std::size_t>(dim);
  } else {
    throw Error("read_points: unknown region shape '" + tok[0] + "'");
  }
  if (i < tok.size()) {
    if (tok[i] != "center" || tok.size() != i + 1 + static_cast<std::size_t>(dim))
      throw Error("read_points: malformed region center");
    for (int k = 0; k < dim; ++k) r.center[k] = to_double(tok[i + 1 + static_cast<std::size_t>(k)], "region");
  }
  return r;
}

Window window_from_json(const json& w, int m) {
  const std::string type = w.at("type").get<std::string>();
  const bool regular = w.value("regular", true);
  if (type == "interval") {
    if (m != 1) throw Error("scheme_from_json: interval window needs int_dim 1");
    return Window::interval(w.at("a").get<double>(), w.at("b").get<double>(), regular);
  }
  if (type == "box") {
    auto lo = w.at("lo").get<std::vector<double>>();
    auto hi = w.at("hi").get<std::vector<double>>();
    if (static_cast<int>(lo.size()) != m || static_cast<int>(hi.size()) != m)
      throw Error("scheme_from_json: box bounds must have int_dim entries");
    return Window::box(Eigen::Map<Vec>(lo.data(), m), Eigen::Map<Vec>(hi.data(), m), regular);
  }
  if (type == "polygon") {
    if (m != 2) throw Error("scheme_from_json: polygon window needs int_dim 2");
    std::vector<Eigen::Vector2d> v;
    for (const auto& p : w.at("vertices")) {
      auto xy = p.get<std::vector<double>>();
      if (xy.size() != 2) throw Error("scheme_from_json: polygon vertices are pairs");
      v.emplace_back(xy[0], xy[1]);
    }
    return Window::polygon(std::move(v), regular);
  }
  if (type == "ball") return Window::ball(m, w.at("radius").get<double>(), regular);
  throw Error("scheme_from_json: unknown window type '" + type + "'");
}

json window_to_json(const Window& w) {
  json out;
  switch (w.kind()) {
    case Window::Kind::Interval:
      out = {{"type", "interval"}, {"a", w.lo()[0]}, {"b", w.hi()[0]}};
      break;
    case Window::Kind::Box:
      out = {{"type", "box"},
             {"lo", std::vector<double>(w.lo().data(), w.lo().data() + w.lo().size())},
             {"hi", std::vector<double>(w.hi().data(), w.hi().data() + w.hi().size())}};
      break;
    case Window::Kind::Polygon: {
      json verts = json::array();
      for (const auto& v : w.vertices()) verts.push_back({v.x(), v.y()});
      out = {{"type", "polygon"}, {"vertices", verts}};
      break;
    }
    case Window::Kind::Ball:
      out = {{"type", "ball"}, {"radius", w.radius()}};
      break;
  }
  out["regular"] = w.regular();
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string version() { return APERIODICA_VERSION; }

std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

void write_points(std::ostream& os, const PointSet& p) {
  if (!p.meta().empty()) {
    std::istringstream meta(p.meta());
    for (std::string line; std::getline(meta, line);) os << "# " << line << '\n';
  }
  os << "dim " << p.dim() << "; region " << p.region().describe() << '\n';
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int k = 0; k < p.dim(); ++k) os << (k ? " " : "") << format_number(p.points()(k, static_cast<Eigen::Index>(i)));
    if (p.has_labels()) {
      os << " |";
      for (auto q : p.label(i)) os << ' ' << q;
    }
    os << '\n';
  }
}

PointSet read_points(std::istream& is) {
  std::string meta;
  int dim = 0;
  Region region;
  std::vector<double> coords;
  std::vector<long long> labels;
  std::optional<std::size_t> label_width;
  std::size_t n = 0;
  std::size_t line_no = 0;
  for (std::string raw; std::getline(is, raw);) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!meta.empty()) meta += '\n';
      meta += trim(line.substr(1));
      continue;
    }
    if (dim == 0) {
      const auto semi = line.find(';');
      const auto head = split_ws(line.substr(0, semi));
      if (semi == std::string::npos || head.size() != 2 || head[0] != "dim")
        throw Error("read_points: expected header 'dim N; region ...' on line " + std::to_string(line_no));
      dim = static_cast<int>(to_double(head[1], "header"));
      if (dim < 1 || dim > 3) throw Error("read_points: dimension must be 1..3");
      auto rest = split_ws(line.substr(semi + 1));
      if (rest.empty() || rest[0] != "region") throw Error("read_points: header lacks a region");
      rest.erase(rest.begin());
      region = parse_region(rest, dim);
      continue;
    }
    const auto bar = line.find('|');
    const auto xs = split_ws(line.substr(0, bar));
    if (static_cast<int>(xs.size()) != dim)
      throw Error("read_points: line " + std::to_string(line_no) + " has " + std::to_string(xs.size()) +
                  " coordinates, expected " + std::to_string(dim));
    for (const auto& x : xs) coords.push_back(to_double(x, "point"));
    std::vector<std::string> qs;
    if (bar != std::string::npos) qs = split_ws(line.substr(bar + 1));
    if (!label_width) label_width = qs.size();
    if (qs.size() != *label_width) throw Error("read_points: inconsistent label columns on line " + std::to_string(line_no));
    for (const auto& q : qs) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(q, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != q.size()) throw Error("read_points: bad label '" + q + "'");
      labels.push_back(v);
    }
    ++n;
  }
  if (dim == 0) throw Error("read_points: missing header");
  Mat pts = Eigen::Map<Mat>(coords.data(), dim, static_cast<Eigen::Index>(n));
  std::optional<IMat> lab;
  if (label_width && *label_width > 0)
    lab = Eigen::Map<IMat>(labels.data(), static_cast<Eigen::Index>(*label_width), static_cast<Eigen::Index>(n));
  return PointSet(std::move(pts), region, std::move(lab), meta);
}

void save_points(const std::string& path, const PointSet& p) {
  std::ofstream out(path);
  if (!out) throw Error("save_points: cannot write '" + path + "'");
  write_points(out, p);
}

PointSet load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("load_points: cannot open '" + path + "'");
  return read_points(in);
}

std::string scheme_to_json(const CutProjectScheme& cps) {
  json basis = json::array();
  for (Eigen::Index i = 0; i < cps.basis().rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < cps.basis().cols(); ++j) row.push_back(cps.basis()(i, j));
    basis.push_back(row);
  }
  json out = {{"phys_dim", cps.phys_dim()},
              {"int_dim", cps.int_dim()},
              {"basis", basis},
              {"window", window_to_json(cps.window())}};
  return out.dump();
}

CutProjectScheme scheme_from_json(const std::string& text, CheckBounds checks) {
  try {
    const json j = json::parse(text);
    const int n = j.at("phys_dim").get<int>();
    const int m = j.at("int_dim").get<int>();
    if (n < 1 || m < 1 || n + m > 8) throw Error("scheme_from_json: bad dimensions");
    const auto rows = j.at("basis").get<std::vector<std::vector<double>>>();
    if (static_cast<int>(rows.size()) != n + m) throw Error("scheme_from_json: basis must have phys_dim + int_dim rows");
    Mat b(n + m, n + m);
    for (int i = 0; i < n + m; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n + m)
        throw Error("scheme_from_json: basis must be square");
      for (int k = 0; k < n + m; ++k) b(i, k) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    }
    return CutProjectScheme(n, m, b, window_from_json(j.at("window"), m), checks, j.value("name", std::string{}));
  } catch (const json::exception& e) {
    throw Error(std::string("scheme_from_json: ") + e.what());
  }
}

CutProjectScheme load_scheme(const std::string& path, CheckBounds checks) {
  return scheme_from_json(read_file(path), checks);
}

TrigPolynomial terms_from_json(const std::string& text) {
  try {
    TrigPolynomial f;
    for (const auto& t : json::parse(text)) {
      const auto q = t.at("q").get<std::vector<long long>>();
      f.terms.push_back({Eigen::Map<const IVec>(q.data(), static_cast<Eigen::Index>(q.size())),
                         Complex(t.value("re", 0.0), t.value("im", 0.0))});
    }
    return f;
  } catch (const json::exception& e) {
    throw Error(std::string("terms_from_json: ") + e.what());
  }
}

TrigPolynomial load_terms(const std::string& path) { return terms_from_json(read_file(path)); }

void write_csv_header(std::ostream& os, const Config& config, bool reproducible) {
  os << "# aperiodica " << version() << '\n';
  for (const auto& [k, v] : config) os << "# " << k << " = " << v << '\n';
  if (!reproducible) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    os << "# generated " << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ") << '\n';
  }
}

void write_census_csv(std::ostream& os, const std::vector<PatchCensus>& censuses) {
  os << "S,class_id,count,frequency\n";
  for (const auto& c : censuses) {
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
      const double freq = static_cast<double>(c.classes[i].count) / static_cast<double>(c.centers_considered);
      os << format_number(c.radius) << ',' << i << ',' << c.classes[i].count << ',' << format_number(freq) << '\n';
    }
  }
}

void write_entropy_csv(std::ostream& os, const std::vector<EntropyPoint>& points) {
  os << "S,N,entropy_density\n";
  for (const auto& e : points)
    os << format_number(e.s) << ',' << e.n_patches << ',' << format_number(e.entropy_density) << '\n';
}

void write_autocorr_csv(std::ostream& os, const WeightedComb& comb) {
  const int dim = comb.support.empty() ? 1 : static_cast<int>(comb.support.front().size());
  for (int k = 0; k < dim; ++k) os << "z_" << (k + 1) << ',';
  os << "weight,estimator,n\n";
  for (std::size_t i = 0; i < comb.size(); ++i) {
    for (int k = 0; k < dim; ++k) os << format_number(comb.support[i][k]) << ',';
    os << format_number(comb.weights[i]) << ',' << to_string(comb.estimator) << ',' << format_number(comb.n) << '\n';
  }
}

void write_peaks_csv(std::ostream& os, const PeakList& peaks, int dim) {
  for (int k = 0; k < dim; ++k) os << "xi_" << (k + 1) << ',';
  os << "s,intensity_bt,intensity_closed,q_label\n";
  for (const auto& pk : peaks.entries) {
    for (int k = 0; k < dim; ++k) os << format_number(pk.xi[k]) << ',';
    os << format_number(peaks.s_used) << ',' << format_number(pk.intensity_bt) << ',';
    if (pk.intensity_closed) os << format_number(*pk.intensity_closed);
    os << ',';
    if (pk.q_label) {
      for (Eigen::Index k = 0; k < pk.q_label->size(); ++k) os << (k ? " " : "") << (*pk.q_label)[k];
    }
    os << '\n';
  }
}

void write_ww_csv(std::ostream& os, const std::vector<UniformPoint>& points) {
  os << "n,sup_dev\n";
  for (const auto& p : points) os << format_number(p.n) << ',' << format_number(p.sup_dev) << '\n';
}

}  // namespace aperiodica
