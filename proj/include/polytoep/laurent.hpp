#pragma once

#include <vector>

#include "polytoep/poly.hpp"

namespace polytoep {

// Truncated Laurent expansion of a rational function about a center w:
// sum of coeffs[k] * (z - w)^(low + k).
template <class K>
struct LaurentExpansion {
    K center = ScalarTraits<K>::zero();
    int low = 0;
    std::vector<K> coeffs;  // exponents low, low+1, ...

    K coeff_at(int exponent) const {
        int k = exponent - low;
        if (k < 0 || k >= static_cast<int>(coeffs.size())) return ScalarTraits<K>::zero();
        return coeffs[static_cast<std::size_t>(k)];
    }
    K residue() const { return coeff_at(-1); }
    bool identically_zero() const {
        for (const K& c : coeffs)
            if (!ScalarTraits<K>::is_zero(c)) return false;
        return true;
    }
};

// Expansion of num/den about w through exponent `upto` inclusive. The center
// must not annihilate the denominator entirely: den == 0 is rejected, and the
// order of vanishing of den at w is finite by polynomial nonzeroness.
template <class K>
LaurentExpansion<K> laurent(const Poly<K>& num, const Poly<K>& den, const K& w, int upto) {
    using T = ScalarTraits<K>;
    if (den.is_zero()) throw ZeroDenominator("laurent: denominator is identically zero");

    LaurentExpansion<K> out;
    out.center = w;
    if (num.is_zero()) return out;  // identically zero expansion

    Poly<K> ns = num.shifted(w);
    Poly<K> ds = den.shifted(w);
    double nscale = ns.coeff_scale(), dscale = ds.coeff_scale();

    auto low_order = [](const Poly<K>& p, double scale) {
        int k = 0;
        while (k <= p.degree() && T::negligible(p.coeff(k), scale)) ++k;
        return k;
    };
    int s = low_order(ds, dscale);
    int t = low_order(ns, nscale);
    out.low = t - s;
    if (upto < out.low) return out;

    int m = upto - out.low + 1;  // number of series coefficients wanted
    auto unit = [](const Poly<K>& p, int drop, int len) {
        std::vector<K> u(static_cast<std::size_t>(len), T::zero());
        for (int k = 0; k < len; ++k) u[static_cast<std::size_t>(k)] = p.coeff(drop + k);
        return u;
    };
    std::vector<K> a = unit(ns, t, m);  // numerator unit part
    std::vector<K> b = unit(ds, s, m);  // denominator unit part, b[0] != 0

    std::vector<K> inv(static_cast<std::size_t>(m), T::zero());
    inv[0] = T::one() / b[0];
    for (int k = 1; k < m; ++k) {
        K acc = T::zero();
        for (int j = 1; j <= k; ++j) acc = acc + b[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
        inv[static_cast<std::size_t>(k)] = -(acc / b[0]);
    }

    out.coeffs.assign(static_cast<std::size_t>(m), T::zero());
    for (int k = 0; k < m; ++k) {
        K acc = T::zero();
        for (int j = 0; j <= k; ++j) acc = acc + a[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
        out.coeffs[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

}  // namespace polytoep
