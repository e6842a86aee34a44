#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "polytoep/poly.hpp"

namespace polytoep {

struct RootCluster {
    std::complex<double> value;
    int multiplicity = 1;
};

// All complex roots with multiplicities. The float overload locates roots by
// Aberth iteration (companion-matrix eigenvalues as fallback), certifies each
// against the backward-error bound, and merges clusters at the pinned relative
// radius. The exact overload first splits off square-free factors (Yun), so
// multiplicities are decided exactly and only well-conditioned factors reach
// the numeric stage.
std::vector<RootCluster> roots(const PolyC& p);
std::vector<RootCluster> roots(const PolyQ& p);

// Monic exact gcd (Euclid) and Yun square-free decomposition:
// p = prod factor^multiplicity up to a constant.
PolyQ poly_gcd(PolyQ a, PolyQ b);
std::vector<std::pair<PolyQ, int>> square_free(const PolyQ& p);

}  // namespace polytoep
