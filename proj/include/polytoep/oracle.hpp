#pragma once

#include <Eigen/Dense>

#include <vector>

#include "polytoep/symbol.hpp"

namespace polytoep {

// Action of the Toeplitz operator with symbol conj(z)^k on the monomial z^m,
// as a scalar factor: T(z^m) = factor * z^(m-k), zero when k > m.
template <class K>
K tzbar_monomial(int k, int m) {
    using T = ScalarTraits<K>;
    if (k < 0 || m < 0) throw ValidationError("tzbar_monomial needs nonnegative powers");
    if (k > m) return T::zero();
    return T::from_int(m - k + 1) / T::from_int(m + 1);
}

// Exact polynomial action of the full symbol: projections of a_i(z) conj(z)^i f.
template <class K>
Poly<K> apply_toeplitz_poly(const Symbol<K>& s, const Poly<K>& f) {
    Poly<K> out;
    for (int i = 0; i <= s.order; ++i) {
        if (s.a(i).is_zero()) continue;
        Poly<K> g = s.a(i) * f;
        std::vector<K> acc(static_cast<std::size_t>(std::max(g.degree() - i + 1, 0)),
                           ScalarTraits<K>::zero());
        for (int m = i; m <= g.degree(); ++m)
            acc[static_cast<std::size_t>(m - i)] =
                acc[static_cast<std::size_t>(m - i)] + tzbar_monomial<K>(i, m) * g.coeff(m);
        out = out + Poly<K>(std::move(acc));
    }
    return out;
}

// Finite section in the normalized monomial basis e_p = sqrt(p+1) z^p.
struct TruncatedToeplitz {
    int size = 0;
    int band = 0;  // entries vanish for q < p - band_above or q > p + band_below; kept coarse
    Eigen::MatrixXcd mat;
};

template <class K>
TruncatedToeplitz truncate(const Symbol<K>& s, int n) {
    if (n < 1) throw ValidationError("truncation size must be >= 1");
    TruncatedToeplitz t;
    t.size = n;
    t.band = std::max(s.max_poly_degree(), s.order);
    t.mat = Eigen::MatrixXcd::Zero(n, n);
    for (int p = 0; p < n; ++p) {
        Poly<K> col = apply_toeplitz_poly(s, Poly<K>::monomial(p, ScalarTraits<K>::one()));
        for (int q = 0; q <= col.degree() && q < n; ++q) {
            std::complex<double> v = ScalarTraits<K>::to_complex(col.coeff(q));
            t.mat(q, p) = v * std::sqrt(static_cast<double>(p + 1) / static_cast<double>(q + 1));
        }
    }
    return t;
}

// The `count` smallest singular values, ascending.
std::vector<double> smallest_singular_values(const TruncatedToeplitz& t, int count);

struct ProbeSizeRecord {
    int size = 0;
    std::vector<double> sigma;  // ascending, the tracked smallest ones
};

struct KernelProbe {
    std::vector<ProbeSizeRecord> per_size;
    int estimated_kernel_dim = 0;
};

// Estimated kernel dimension from singular-value decay across growing
// truncations: a tracked value counts if it shrinks by the pinned factor at
// each size step (waived once below the double-precision floor) and ends
// below the final threshold, while the first non-counted value must stay
// above the gap floor. Anything in between raises ConvergenceAmbiguous.
KernelProbe kernel_probe_on(const std::vector<ProbeSizeRecord>& records);

template <class K>
KernelProbe kernel_probe(const Symbol<K>& s, const std::vector<int>& sizes) {
    if (sizes.empty()) throw ValidationError("kernel_probe needs at least one size");
    std::vector<ProbeSizeRecord> rec;
    rec.reserve(sizes.size());
    for (int n : sizes) {
        TruncatedToeplitz t = truncate(s, n);
        rec.push_back({n, smallest_singular_values(t, std::min(4, n))});
    }
    return kernel_probe_on(rec);
}

// Independent check of the first-order action: compares the projection rule
// against the contour-integral form (1/z^2) * integral_0^z w f'(w) dw on
// interior sample points. Returns the maximum absolute residual.
double quadrature_check(const PolyC& f);

}  // namespace polytoep
