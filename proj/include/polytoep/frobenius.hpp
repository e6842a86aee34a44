#pragma once

#include <algorithm>
#include <vector>

#include "polytoep/diffop.hpp"
#include "polytoep/laurent.hpp"
#include "polytoep/roots.hpp"

namespace polytoep {

enum class PointKind { Ordinary, RegularSingular, IrregularSingular };

template <class K>
struct Classification {
    PointKind kind = PointKind::Ordinary;
    int leading_vanishing = 0;  // order of vanishing of the top coefficient at w
};

// Fuchs test at w: with s = ord_w(c_n), the point is (at worst) a regular
// singularity iff ord_w(c_i) >= s - (n - i) for every i.
template <class K>
Classification<K> classify(const DiffOp<K>& a, const K& w) {
    if (a.is_zero()) throw ValidationError("classify needs a nonzero operator");
    const int n = a.order();
    Classification<K> out;
    int s = a.coeff(n).order_at(w);
    out.leading_vanishing = s;
    if (s == 0) return out;  // ordinary
    out.kind = PointKind::RegularSingular;
    for (int i = 0; i < n; ++i) {
        int oi = a.coeff(i).order_at(w);
        if (oi < s - (n - i)) {
            out.kind = PointKind::IrregularSingular;
            break;
        }
    }
    return out;
}

// lambda (lambda-1) ... (lambda-i+1) as a polynomial in lambda.
template <class K>
Poly<K> falling_factorial(int i) {
    using T = ScalarTraits<K>;
    Poly<K> p = Poly<K>::constant(T::one());
    for (int j = 0; j < i; ++j)
        p = p * Poly<K>({T::from_int(-j), T::one()});
    return p;
}

template <class K>
struct IndicialData {
    K point = ScalarTraits<K>::zero();
    Poly<K> indicial;                        // in lambda; degree == operator order
    std::vector<RootCluster> all_roots;      // numeric view of the roots
    std::vector<long> nonneg_integer_roots;  // exact on the exact backend
};

// The normalized coefficients b_i: multiply the operator by (z-w)^(n-s)
// (divide when s > n; regularity makes that exact) and take the value of
// (z-w)^(-i) c_i at w. Exposed for reuse by the series recurrence.
template <class K>
std::vector<Poly<K>> regular_normal_form(const DiffOp<K>& a, const K& w) {
    Classification<K> cls = classify(a, w);
    if (cls.kind == PointKind::IrregularSingular)
        throw NotRegular("indicial data only exists at regular points");
    const int n = a.order();
    const int m = n - cls.leading_vanishing;
    std::vector<Poly<K>> b;
    b.reserve(static_cast<std::size_t>(n) + 1);
    Poly<K> lin({-w, ScalarTraits<K>::one()});
    for (int i = 0; i <= n; ++i) {
        Poly<K> ci = a.coeff(i);
        if (ci.is_zero()) {
            b.push_back(ci);
            continue;
        }
        if (m >= 0) {
            b.push_back(ci * lin.pow(m));
        } else {
            Poly<K> cur = ci;
            for (int k = 0; k < -m; ++k) {
                auto [q, rem] = cur.div_linear(w);
                if (!ScalarTraits<K>::negligible(rem, ci.coeff_scale()))
                    throw NotRegular("coefficient not divisible as required at a regular point");
                cur = q;
            }
            b.push_back(cur);
        }
    }
    return b;
}

template <class K>
std::vector<long> integer_roots(const Poly<K>& p, long lower_bound);

template <class K>
IndicialData<K> indicial(const DiffOp<K>& a, const K& w) {
    using T = ScalarTraits<K>;
    std::vector<Poly<K>> b = regular_normal_form(a, w);
    IndicialData<K> out;
    out.point = w;
    for (int i = 0; i < static_cast<int>(b.size()); ++i) {
        Poly<K> cur = b[static_cast<std::size_t>(i)];
        double scale = cur.coeff_scale();
        for (int k = 0; k < i && !cur.is_zero(); ++k) {
            auto [q, rem] = cur.div_linear(w);
            if (!T::negligible(rem, scale))
                throw NotRegular("normalized coefficient not divisible at the singular point");
            cur = q;
        }
        K bi = cur(w);
        if (!T::is_zero(bi)) out.indicial = out.indicial + bi * falling_factorial<K>(i);
    }
    if (out.indicial.is_zero())
        throw InternalInconsistency("indicial polynomial vanished identically");
    if (out.indicial.degree() >= 1) out.all_roots = roots(out.indicial);
    out.nonneg_integer_roots = integer_roots(out.indicial, 0);
    return out;
}

template <>
inline std::vector<long> integer_roots<GaussRational>(const PolyQ& p, long lower_bound) {
    if (p.is_zero()) throw ValidationError("integer_roots of the zero polynomial");
    std::vector<long> out;
    if (p.degree() == 0) return out;
    // Exact Cauchy bound: every root has |r| <= 1 + max|c_i| / |c_d|, bounded
    // rationally via |c| <= |re|+|im| above and |c| >= max(|re|,|im|) below.
    auto mag_hi = [](const GaussRational& v) {
        return Rational(boost::multiprecision::abs(Rational(v.re)) +
                        boost::multiprecision::abs(Rational(v.im)));
    };
    auto mag_lo = [](const GaussRational& v) {
        Rational a = boost::multiprecision::abs(Rational(v.re));
        Rational b = boost::multiprecision::abs(Rational(v.im));
        return a > b ? a : b;
    };
    Rational hi(0);
    for (int i = 0; i < p.degree(); ++i) hi = std::max(hi, mag_hi(p.coeff(i)));
    Rational bound = 1 + hi / mag_lo(p.leading());
    long top = bound.template convert_to<long>() + 1;
    for (long v = lower_bound; v <= top; ++v)
        if (p(GaussRational(v)).is_zero()) out.push_back(v);
    return out;
}

template <>
inline std::vector<long> integer_roots<std::complex<double>>(const PolyC& p, long lower_bound) {
    if (p.is_zero()) throw ValidationError("integer_roots of the zero polynomial");
    std::vector<long> out;
    if (p.degree() == 0) return out;
    for (const RootCluster& r : roots(p)) {
        long v;
        if (ScalarTraits<std::complex<double>>::integer_value(r.value, v) && v >= lower_bound)
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class K>
struct SeriesSolution {
    K center = ScalarTraits<K>::zero();
    long exponent = 0;      // leading power of (z - w)
    std::vector<K> coeffs;  // u_0 = 1, u_1, ... up to the requested order

    // The truncated solution as an honest polynomial in z.
    Poly<K> to_poly() const {
        Poly<K> lin({-center, ScalarTraits<K>::one()});
        Poly<K> out;
        Poly<K> pw = lin.pow(static_cast<int>(exponent));
        for (const K& u : coeffs) {
            out = out + u * pw;
            pw = pw * lin;
        }
        return out;
    }
};

// Frobenius power-series solution with leading exponent `exponent` (an
// indicial root), coefficients through total degree `upto` in (z-w). When the
// recurrence divides by a vanishing indicial value: a nonzero right side
// raises ResonanceObstruction, a zero right side takes the canonical choice
// u_K = 0 (that direction belongs to the other root's solution).
template <class K>
SeriesSolution<K> series_solution(const DiffOp<K>& a, const K& w, long exponent, int upto) {
    using T = ScalarTraits<K>;
    if (exponent < 0) throw ValidationError("series_solution needs a nonnegative leading exponent");
    std::vector<Poly<K>> b = regular_normal_form(a, w);
    const int n = static_cast<int>(b.size()) - 1;

    // P_d(lambda) = sum_i B_{i,i+d} FF(lambda, i), where B_i = b_i shifted to 0.
    int dmax = 0;
    std::vector<Poly<K>> shifted;
    shifted.reserve(b.size());
    for (const Poly<K>& bi : b) {
        shifted.push_back(bi.shifted(w));
        dmax = std::max(dmax, shifted.back().degree());
    }
    std::vector<Poly<K>> pd(static_cast<std::size_t>(dmax) + 1);
    for (int i = 0; i <= n; ++i) {
        const Poly<K>& si = shifted[static_cast<std::size_t>(i)];
        Poly<K> ff = falling_factorial<K>(i);
        for (int j = i; j <= si.degree(); ++j) {
            if (T::is_zero(si.coeff(j))) continue;
            pd[static_cast<std::size_t>(j - i)] =
                pd[static_cast<std::size_t>(j - i)] + si.coeff(j) * ff;
        }
    }

    SeriesSolution<K> out;
    out.center = w;
    out.exponent = exponent;
    int terms = static_cast<int>(upto - exponent) + 1;
    if (terms < 1) throw ValidationError("series truncation ends before the leading exponent");
    out.coeffs.assign(static_cast<std::size_t>(terms), T::zero());
    out.coeffs[0] = T::one();

    const Poly<K>& p0 = pd[0];
    for (int k = 1; k < terms; ++k) {
        K rhs = T::zero();
        for (int m = 0; m < k; ++m) {
            int d = k - m;
            if (d > dmax) continue;
            const Poly<K>& pdk = pd[static_cast<std::size_t>(d)];
            if (pdk.is_zero()) continue;
            rhs = rhs + out.coeffs[static_cast<std::size_t>(m)] * pdk(T::from_int(exponent + m));
        }
        K pivot = p0(T::from_int(exponent + k));
        double scale = std::max(p0.coeff_scale(), 1.0);
        if (T::negligible(pivot, scale)) {
            if (!T::negligible(rhs, scale))
                throw ResonanceObstruction("resonant exponent with a nonzero right side");
            out.coeffs[static_cast<std::size_t>(k)] = T::zero();
        } else {
            out.coeffs[static_cast<std::size_t>(k)] = -(rhs / pivot);
        }
    }
    return out;
}

}  // namespace polytoep
