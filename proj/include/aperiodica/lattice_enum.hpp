#pragma once

#include <functional>

#include "aperiodica/types.hpp"

namespace aperiodica {

// Calls visit(q) for every integer vector q with |M (q - center)|^2 <= radius2
// (Fincke-Pohst depth-first enumeration on the R factor of M = QR).
void enumerate_ellipsoid(const Mat& m, const Vec& center, double radius2, const std::function<void(const IVec&)>& visit);

// Calls visit(q, B q) for every integer q with B q in the closed box [lo, hi].
void enumerate_box_preimage(const Mat& basis, const Vec& lo, const Vec& hi,
                            const std::function<void(const IVec&, const Vec&)>& visit);

}  // namespace aperiodica
