#pragma once

#include <complex>
#include <optional>

#include "polytoep/poly.hpp"
#include "polytoep/rational.hpp"

namespace polytoep {

// Try to promote a numerically found root of an exact polynomial to an exact
// Gaussian rational. Both components are reconstructed by continued fractions
// with a modest denominator cap; the candidate counts only if it verifies as
// an exact root. Returns nothing for irrational (or unluckily noisy) roots.
inline std::optional<GaussRational> snap_root(const PolyQ& p, std::complex<double> r,
                                              long max_den = 1000000) {
    GaussRational cand{rational_reconstruct(r.real(), max_den),
                       rational_reconstruct(r.imag(), max_den)};
    if (!p(cand).is_zero()) return std::nullopt;
    return cand;
}

}  // namespace polytoep
