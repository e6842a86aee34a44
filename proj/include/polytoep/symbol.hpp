#pragma once

#include <optional>
#include <vector>

#include "polytoep/poly.hpp"
#include "polytoep/roots.hpp"

namespace polytoep {

// A polyanalytic symbol sum_{i=0..order} coeffs[i](z) * conj(z)^i.
template <class K>
struct Symbol {
    int order = 0;
    std::vector<Poly<K>> coeffs;  // indexed by the conj(z) power, size order+1

    Symbol() : coeffs(1) {}
    Symbol(int n, std::vector<Poly<K>> a) : order(n), coeffs(std::move(a)) {
        if (order < 0 || coeffs.size() != static_cast<std::size_t>(order) + 1)
            throw ValidationError("symbol needs exactly order+1 coefficient polynomials");
    }

    // Highest conj-power actually present (0 for the zero symbol).
    int effective_order() const {
        for (int i = order; i >= 0; --i)
            if (!coeffs[static_cast<std::size_t>(i)].is_zero()) return i;
        return 0;
    }
    bool canonical() const {
        return order == 0 || !coeffs[static_cast<std::size_t>(order)].is_zero();
    }
    const Poly<K>& a(int i) const { return coeffs[static_cast<std::size_t>(i)]; }

    int max_poly_degree() const {
        int d = 0;
        for (const auto& p : coeffs) d = std::max(d, p.degree());
        return d;
    }
};

using SymbolQ = Symbol<GaussRational>;
using SymbolC = Symbol<std::complex<double>>;

inline SymbolC to_float(const SymbolQ& s) {
    std::vector<PolyC> a;
    a.reserve(s.coeffs.size());
    for (const auto& p : s.coeffs) a.push_back(to_float(p));
    return SymbolC(s.order, std::move(a));
}
inline const SymbolC& to_float(const SymbolC& s) { return s; }

// tilde transform: sum a_i(z) z^(order-i); on the unit circle the symbol
// equals z^(-order) times this polynomial.
template <class K>
Poly<K> tilde(const Symbol<K>& s, int order) {
    if (order < s.effective_order())
        throw OrderTooSmall("tilde order below the symbol's effective order");
    Poly<K> t;
    for (int i = 0; i <= s.order && i <= order; ++i)
        t = t + s.a(i) * Poly<K>::monomial(order - i, ScalarTraits<K>::one());
    return t;
}

template <class K>
Poly<K> tilde(const Symbol<K>& s) {
    return tilde(s, s.order);
}

// Coefficient-wise d/dz; the declared order is preserved (the top coefficient
// may become zero, which downstream code must tolerate).
template <class K>
Symbol<K> dz_derivative(const Symbol<K>& s) {
    std::vector<Poly<K>> a;
    a.reserve(s.coeffs.size());
    for (const auto& p : s.coeffs) a.push_back(p.derivative());
    return Symbol<K>(s.order, std::move(a));
}

template <class K>
Symbol<K> shift_by_scalar(const Symbol<K>& s, const K& mu) {
    Symbol<K> r = s;
    r.coeffs[0] = r.coeffs[0] - Poly<K>::constant(mu);
    return r;
}

inline std::complex<double> eval_symbol(const SymbolC& s, std::complex<double> z) {
    std::complex<double> zb = std::conj(z), pw = 1.0, acc = 0.0;
    for (int i = 0; i <= s.order; ++i) {
        acc += s.a(i)(z)*pw;
        pw *= zb;
    }
    return acc;
}

// Winding number of the boundary curve of the symbol about 0, by adaptive
// circle sampling (doubling from 512 points until every step turns < pi/4).
// Pre: the symbol does not vanish on the unit circle.
int sampled_winding(const SymbolC& s);

struct IndexData {
    std::optional<int> winding;         // unset when a boundary zero blocks sampling
    std::optional<int> fredholm_index;  // = -winding
    bool boundary_ambiguous = false;    // some tilde root within the boundary band
    std::vector<RootCluster> tilde_roots;
    std::vector<RootCluster> zeros_in_disc;
    int disc_zero_count = 0;  // multiplicity-weighted
};

// Index bookkeeping: locate tilde roots, split by |root| against the pinned
// boundary band, sample the winding, and require it to match the argument
// principle count (#disc zeros - order) exactly.
template <class K>
IndexData index_data(const Symbol<K>& s) {
    Poly<K> t = tilde(s, s.order);
    if (t.is_zero())
        throw ValidationError("tilde transform vanishes identically; symbol is 0 on the circle");

    IndexData out;
    if (t.degree() >= 1) out.tilde_roots = roots(t);
    for (const RootCluster& r : out.tilde_roots) {
        double m = std::abs(r.value);
        if (std::abs(m - 1.0) < tol::boundary) {
            out.boundary_ambiguous = true;
        } else if (m < 1.0) {
            out.zeros_in_disc.push_back(r);
            out.disc_zero_count += r.multiplicity;
        }
    }
    if (out.boundary_ambiguous) return out;

    int w = sampled_winding(to_float(s));
    if (w != out.disc_zero_count - s.order)
        throw WindingDisagreement("sampled winding disagrees with the tilde zero count");
    out.winding = w;
    out.fredholm_index = -w;
    return out;
}

}  // namespace polytoep
