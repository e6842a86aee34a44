#pragma once

#include <algorithm>
#include <complex>
#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

#include "polytoep/errors.hpp"
#include "polytoep/scalar.hpp"

namespace polytoep {

// Dense univariate polynomial over K, coefficients ascending, trailing
// structural zeros trimmed. degree() is -1 for the zero polynomial (the usual
// degree bounds hold if that is read as -infinity). Order of vanishing of the
// zero polynomial is reported as kInfiniteOrder.
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

template <class K>
class Poly {
    using T = ScalarTraits<K>;

public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const K& v) { return Poly(std::vector<K>{v}); }
    static Poly monomial(int k, const K& v) {
        std::vector<K> c(static_cast<std::size_t>(k) + 1, T::zero());
        c.back() = v;
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }
    // Coefficient of z^k, zero beyond the stored range.
    K coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return T::zero();
        return c_[static_cast<std::size_t>(k)];
    }
    K leading() const { return c_.empty() ? T::zero() : c_.back(); }

    double coeff_scale() const {
        double s = 0;
        for (const K& v : c_) s = std::max(s, T::abs(v));
        return s;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), T::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<K> r(c_);
        for (K& v : r) v = -v;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, T::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const K& s, const Poly& p) {
        std::vector<K> r(p.c_);
        for (K& v : r) v = s * v;
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    K operator()(const K& z) const {
        K acc = T::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = T::from_int(static_cast<long>(i)) * c_[i];
        return Poly(std::move(r));
    }

    // p(u + w) as a polynomial in u (Taylor shift, O(deg^2)).
    Poly shifted(const K& w) const {
        std::vector<K> d(c_);
        int n = static_cast<int>(d.size());
        for (int j = 0; j < n; ++j)
            for (int i = n - 2; i >= j; --i) d[i] = d[i] + w * d[i + 1];
        return Poly(std::move(d));
    }

    // Synthetic division by (z - w): p = q*(z-w) + rem.
    std::pair<Poly, K> div_linear(const K& w) const {
        if (c_.empty()) return {Poly(), T::zero()};
        std::vector<K> q(c_.size() - 1, T::zero());
        K carry = c_.back();
        for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i) {
            q[static_cast<std::size_t>(i)] = carry;
            carry = c_[static_cast<std::size_t>(i)] + w * carry;
        }
        return {Poly(std::move(q)), carry};
    }

    // Multiplicity of w as a root (kInfiniteOrder for the zero polynomial).
    // Float remainders are compared against the coefficient scale.
    int order_at(const K& w) const {
        if (is_zero()) return kInfiniteOrder;
        double scale = coeff_scale();
        int ord = 0;
        Poly p = *this;
        while (!p.is_zero()) {
            auto [q, rem] = p.div_linear(w);
            if (!T::negligible(rem, scale)) break;
            ++ord;
            p = std::move(q);
        }
        return ord;
    }

    // Exact polynomial division; throws unless the remainder vanishes.
    Poly div_exact(const Poly& d) const {
        if (d.is_zero()) throw ValidationError("division by zero polynomial");
        if (is_zero()) return Poly();
        double scale = std::max(coeff_scale(), d.coeff_scale());
        std::vector<K> rem(c_);
        int dd = d.degree();
        if (degree() < dd) throw ValidationError("polynomial division is not exact");
        std::vector<K> q(static_cast<std::size_t>(degree() - dd) + 1, T::zero());
        for (int k = degree() - dd; k >= 0; --k) {
            K f = rem[static_cast<std::size_t>(k + dd)] / d.leading();
            q[static_cast<std::size_t>(k)] = f;
            for (int i = 0; i <= dd; ++i)
                rem[static_cast<std::size_t>(k + i)] =
                    rem[static_cast<std::size_t>(k + i)] - f * d.coeff(i);
        }
        for (const K& v : rem)
            if (!T::negligible(v, scale)) throw ValidationError("polynomial division is not exact");
        return Poly(std::move(q));
    }

    Poly pow(int k) const {
        Poly r = constant(T::one());
        for (int i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && T::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
Poly<K> poly_shift(const Poly<K>& p, const K& w) {
    return p.shifted(w);
}

using PolyQ = Poly<GaussRational>;
using PolyC = Poly<std::complex<double>>;

inline PolyC to_float(const PolyQ& p) {
    std::vector<std::complex<double>> c;
    c.reserve(static_cast<std::size_t>(p.degree() + 1));
    for (const auto& v : p.coeffs()) c.push_back(v.to_complex());
    return PolyC(std::move(c));
}

inline const PolyC& to_float(const PolyC& p) { return p; }

}  // namespace polytoep
