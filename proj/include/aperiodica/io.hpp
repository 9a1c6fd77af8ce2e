#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "aperiodica/autocorr.hpp"
#include "aperiodica/cps.hpp"
#include "aperiodica/diffraction.hpp"
#include "aperiodica/hull.hpp"
#include "aperiodica/patches.hpp"
#include "aperiodica/pointset.hpp"

namespace aperiodica {

std::string version();

// Point file:
//   # free text (meta), any number of lines
//   dim N; region ball S [center c1 .. cN]   (or: region box h1 .. hN [center ..])
//   x1 .. xN [| q1 .. qK]
// Coordinates use 17 significant digits.
void write_points(std::ostream& os, const PointSet& p);
PointSet read_points(std::istream& is);
void save_points(const std::string& path, const PointSet& p);
PointSet load_points(const std::string& path);

// Scheme JSON: {"phys_dim", "int_dim", "basis": rows, "window": {...}} with
// window types interval {a, b}, box {lo, hi}, polygon {vertices}, ball
// {radius}, each with an optional "regular" flag (default true).
std::string scheme_to_json(const CutProjectScheme& cps);
CutProjectScheme scheme_from_json(const std::string& text, CheckBounds checks = {});
CutProjectScheme load_scheme(const std::string& path, CheckBounds checks = {});

// [{"q": [..], "re": .., "im": ..}, ..]
TrigPolynomial terms_from_json(const std::string& text);
TrigPolynomial load_terms(const std::string& path);

// Comment header shared by all CSV exports: library version, one line per
// config entry, and a timestamp unless reproducible.
using Config = std::vector<std::pair<std::string, std::string>>;
void write_csv_header(std::ostream& os, const Config& config, bool reproducible);

void write_census_csv(std::ostream& os, const std::vector<PatchCensus>& censuses);
void write_entropy_csv(std::ostream& os, const std::vector<EntropyPoint>& points);
void write_autocorr_csv(std::ostream& os, const WeightedComb& comb);
void write_peaks_csv(std::ostream& os, const PeakList& peaks, int dim);
void write_ww_csv(std::ostream& os, const std::vector<UniformPoint>& points);

// 17 significant digits.
std::string format_number(double v);

}  // namespace aperiodica
