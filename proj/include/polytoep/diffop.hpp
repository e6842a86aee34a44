#pragma once

#include <utility>
#include <vector>

#include "polytoep/symbol.hpp"

namespace polytoep {

// Holomorphic-coefficient differential operator sum c[k](z) D^k in normal form
// (all D's pushed right; trailing zero coefficients trimmed, so order() is the
// true order and -1 identifies the zero operator).
template <class K>
class DiffOp {
    using T = ScalarTraits<K>;

public:
    DiffOp() = default;
    explicit DiffOp(std::vector<Poly<K>> coeffs) : c_(std::move(coeffs)) { trim(); }

    static DiffOp zero() { return DiffOp(); }
    static DiffOp identity() { return mult(Poly<K>::constant(T::one())); }
    static DiffOp d() {
        return DiffOp({Poly<K>(), Poly<K>::constant(T::one())});
    }
    static DiffOp mult(const Poly<K>& g) {
        return DiffOp(std::vector<Poly<K>>{g});
    }
    // z D + i
    static DiffOp zd_plus(long i) {
        return DiffOp({Poly<K>::constant(T::from_int(i)),
                       Poly<K>::monomial(1, T::one())});
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Poly<K>>& coeffs() const { return c_; }
    Poly<K> coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Poly<K>();
        return c_[static_cast<std::size_t>(k)];
    }

    friend DiffOp operator+(const DiffOp& a, const DiffOp& b) {
        std::vector<Poly<K>> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return DiffOp(std::move(r));
    }
    friend DiffOp operator-(const DiffOp& a, const DiffOp& b) {
        return a + (T::from_int(-1) * b);
    }
    friend DiffOp operator*(const K& s, const DiffOp& a) {
        std::vector<Poly<K>> r(a.c_);
        for (auto& p : r) p = s * p;
        return DiffOp(std::move(r));
    }
    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

    Poly<K> apply(const Poly<K>& f) const {
        Poly<K> out, der = f;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            out = out + c_[k] * der;
            der = der.derivative();
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Poly<K>> c_;
};

// D composed on the left: D(g y) = g y' + g' y, so D . sum b_j D^j
// = sum (b_j D^{j+1} + b_j' D^j). This single commutator step is the whole
// normal-form calculus; compositions below just iterate it.
template <class K>
DiffOp<K> d_compose(const DiffOp<K>& b) {
    std::vector<Poly<K>> r(static_cast<std::size_t>(b.order()) + 2);
    for (int j = 0; j <= b.order(); ++j) {
        r[static_cast<std::size_t>(j) + 1] = r[static_cast<std::size_t>(j) + 1] + b.coeff(j);
        r[static_cast<std::size_t>(j)] = r[static_cast<std::size_t>(j)] + b.coeff(j).derivative();
    }
    return DiffOp<K>(std::move(r));
}

template <class K>
DiffOp<K> compose(const DiffOp<K>& a, const DiffOp<K>& b) {
    if (a.is_zero() || b.is_zero()) return DiffOp<K>::zero();
    DiffOp<K> result, cur = b;  // cur = D^k . b
    for (int k = 0; k <= a.order(); ++k) {
        if (!a.coeff(k).is_zero()) {
            std::vector<Poly<K>> term;
            term.reserve(static_cast<std::size_t>(cur.order()) + 1);
            for (int j = 0; j <= cur.order(); ++j) term.push_back(a.coeff(k) * cur.coeff(j));
            result = result + DiffOp<K>(std::move(term));
        }
        if (k < a.order()) cur = d_compose(cur);
    }
    return result;
}

// Lambda_n = prod_{i=2..n+1} (zD + i); the order-n ladder operator that turns
// the Toeplitz action into a differential one.
template <class K>
DiffOp<K> build_lambda(int n) {
    DiffOp<K> r = DiffOp<K>::identity();
    for (int i = 2; i <= n + 1; ++i) r = compose(r, DiffOp<K>::zd_plus(i));
    return r;
}

// The holomorphic differential operator attached to a polyanalytic symbol:
// sum_{i=0..n} [prod_{k=i+2..n+1} (zD+k)] . D^i . (multiplication by a_i).
template <class K>
DiffOp<K> build_dphi(const Symbol<K>& s) {
    const int n = s.order;
    DiffOp<K> total;
    for (int i = 0; i <= n; ++i) {
        if (s.a(i).is_zero()) continue;
        DiffOp<K> term = DiffOp<K>::mult(s.a(i));
        for (int k = 0; k < i; ++k) term = d_compose(term);
        for (int k = i + 2; k <= n + 1; ++k) term = compose(DiffOp<K>::zd_plus(k), term);
        total = total + term;
    }
    return total;
}

// (top, subleading) coefficient polynomials of an operator of order >= 1.
template <class K>
std::pair<Poly<K>, Poly<K>> leading_terms(const DiffOp<K>& a) {
    if (a.order() < 1) throw ValidationError("leading_terms needs an operator of order >= 1");
    return {a.coeff(a.order()), a.coeff(a.order() - 1)};
}

using DiffOpQ = DiffOp<GaussRational>;
using DiffOpC = DiffOp<std::complex<double>>;

template <class K>
DiffOpC to_float_op(const DiffOp<K>& a) {
    std::vector<PolyC> c;
    c.reserve(static_cast<std::size_t>(a.order()) + 1);
    for (int k = 0; k <= a.order(); ++k) c.push_back(to_float(a.coeff(k)));
    return DiffOpC(std::move(c));
}

}  // namespace polytoep
