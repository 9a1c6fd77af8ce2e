#include "aperiodica/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace aperiodica {

namespace {

constexpr double kW = 800.0;
constexpr double kH = 500.0;
constexpr double kMargin = 60.0;

std::string num(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

std::string tick_label(double v) {
  std::ostringstream os;
  os << std::setprecision(4) << v;
  return os.str();
}

}  // namespace

std::string peaks_svg(const PeakList& peaks, int dim, double floor) {
  if (dim != 1 && dim != 2) throw Error("peaks_svg: only 1D and 2D peak lists can be plotted");
  double imax = 0.0;
  for (const auto& p : peaks.entries) imax = std::max(imax, p.intensity_bt);

  double lo[2] = {0.0, 0.0};
  double hi[2] = {1.0, 1.0};
  bool first = true;
  for (const auto& p : peaks.entries) {
    for (int k = 0; k < dim; ++k) {
      lo[k] = first ? p.xi[k] : std::min(lo[k], p.xi[k]);
      hi[k] = first ? p.xi[k] : std::max(hi[k], p.xi[k]);
    }
    first = false;
  }
  for (int k = 0; k < dim; ++k) {
    if (hi[k] - lo[k] < 1e-12) {
      lo[k] -= 1.0;
      hi[k] += 1.0;
    }
  }
  const double pw = kW - 2.0 * kMargin;
  const double ph = kH - 2.0 * kMargin;
  auto sx = [&](double x) { return kMargin + (x - lo[0]) / (hi[0] - lo[0]) * pw; };
  auto sy = [&](double y) { return kH - kMargin - (y - lo[1]) / (hi[1] - lo[1]) * ph; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW
     << ' ' << kH << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g stroke=\"black\" stroke-width=\"1\">\n";
  os << "<line x1=\"" << kMargin << "\" y1=\"" << kH - kMargin << "\" x2=\"" << kW - kMargin << "\" y2=\""
     << kH - kMargin << "\"/>\n";
  os << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\"" << kH - kMargin
     << "\"/>\n</g>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int t = 0; t <= 4; ++t) {
    const double x = lo[0] + (hi[0] - lo[0]) * t / 4.0;
    os << "<text x=\"" << num(sx(x)) << "\" y=\"" << kH - kMargin + 18 << "\" text-anchor=\"middle\">"
       << tick_label(x) << "</text>\n";
  }
  if (dim == 1) {
    os << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 15 << "\" text-anchor=\"middle\">ξ</text>\n";
    os << "<text x=\"18\" y=\"" << kH / 2 << "\" transform=\"rotate(-90 18 " << kH / 2
       << ")\" text-anchor=\"middle\">intensity (max " << tick_label(imax) << ")</text>\n";
  } else {
    for (int t = 0; t <= 4; ++t) {
      const double y = lo[1] + (hi[1] - lo[1]) * t / 4.0;
      os << "<text x=\"" << kMargin - 6 << "\" y=\"" << num(sy(y) + 4) << "\" text-anchor=\"end\">" << tick_label(y)
         << "</text>\n";
    }
    os << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 15 << "\" text-anchor=\"middle\">ξ₁</text>\n";
    os << "<text x=\"18\" y=\"" << kH / 2 << "\" transform=\"rotate(-90 18 " << kH / 2
       << ")\" text-anchor=\"middle\">ξ₂</text>\n";
  }
  os << "</g>\n";

  if (imax > 0.0) {
    os << "<g fill=\"steelblue\" stroke=\"steelblue\">\n";
    const double rmax = 0.04 * std::min(pw, ph);
    for (const auto& p : peaks.entries) {
      const double rel = p.intensity_bt / imax;
      if (rel < floor) continue;
      if (dim == 1) {
        const double x = sx(p.xi[0]);
        os << "<line x1=\"" << num(x) << "\" y1=\"" << kH - kMargin << "\" x2=\"" << num(x) << "\" y2=\""
           << num(kH - kMargin - rel * ph) << "\" stroke-width=\"1.5\"/>\n";
      } else {
        os << "<circle cx=\"" << num(sx(p.xi[0])) << "\" cy=\"" << num(sy(p.xi[1])) << "\" r=\""
           << num(rmax * std::sqrt(rel)) << "\"/>\n";
      }
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace aperiodica
