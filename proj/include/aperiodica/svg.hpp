#pragma once

#include <string>

#include "aperiodica/diffraction.hpp"

namespace aperiodica {

// Stem plot for 1D peak lists, disk-area plot (area ∝ intensity) for 2D.
// Axes are labelled in units of ξ. Peaks below `floor` x max intensity are
// dropped.
std::string peaks_svg(const PeakList& peaks, int dim, double floor = 1e-6);

}  // namespace aperiodica
