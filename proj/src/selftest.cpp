#include <random>
#include <sstream>

#include "polytoep/diffop.hpp"
#include "polytoep/frobenius.hpp"
#include "polytoep/laurent.hpp"
#include "polytoep/oracle.hpp"
#include "polytoep/selftest.hpp"

namespace polytoep {

namespace {

using Rng = std::mt19937_64;
using TQ = ScalarTraits<GaussRational>;

Rational rand_rational(Rng& g) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return Rational(num(g), den(g));
}

GaussRational rand_gauss(Rng& g) {
    Rational re = rand_rational(g);
    Rational im(0);
    if (std::uniform_int_distribution<int>(0, 2)(g) == 0) im = rand_rational(g);
    return {re, im};
}

PolyQ rand_poly(Rng& g, int maxdeg) {
    int d = std::uniform_int_distribution<int>(0, maxdeg)(g);
    std::vector<GaussRational> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = rand_gauss(g);
    return PolyQ(std::move(c));
}

// Random symbol with a_n(0) != 0, so the attached operator has full order n.
SymbolQ rand_symbol(Rng& g, int max_order, int maxdeg) {
    int n = std::uniform_int_distribution<int>(1, max_order)(g);
    std::vector<PolyQ> a(static_cast<std::size_t>(n) + 1);
    for (auto& p : a) p = rand_poly(g, maxdeg);
    if (a.back().coeff(0).is_zero())
        a.back() = a.back() + PolyQ::constant(TQ::one());
    return SymbolQ(n, std::move(a));
}

GaussRational gauss_pow(const GaussRational& v, int k) {
    GaussRational r = TQ::one();
    for (int i = 0; i < k; ++i) r = r * v;
    return r;
}

long binom_long(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

template <class F>
SuiteResult run_suite(const std::string& name, int cases, std::uint64_t seed, F&& body) {
    SuiteResult res;
    res.name = name;
    for (int c = 0; c < cases; ++c) {
        Rng g(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(c + 1));
        ++res.cases;
        std::string msg;
        bool ok = false;
        try {
            ok = body(g, c, msg);
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        if (!ok) {
            ++res.failures;
            if (res.messages.size() < 3)
                res.messages.push_back("case " + std::to_string(c) + ": " + msg);
        }
    }
    return res;
}

}  // namespace

SelftestResult run_selftest(const SelftestOptions& opt) {
    SelftestResult out;
    const int N = opt.cases;

    // The central identity: applying the ladder product prod_{i=2..n+1}(zD+i)
    // after the Toeplitz action equals applying the attached differential
    // operator directly. Exact rational arithmetic, no tolerance.
    out.suites.push_back(run_suite("intertwine", N, opt.seed, [&](Rng& g, int, std::string& msg) {
        SymbolQ s = rand_symbol(g, 4, 4);
        PolyQ f = rand_poly(g, 6);
        if (f.is_zero()) f = PolyQ::constant(TQ::one());
        DiffOpQ dphi = build_dphi(s);
        if (opt.perturb)
            dphi = dphi + DiffOpQ::mult(PolyQ::constant(
                              GaussRational{Rational(1, 1000003), Rational(0)}));
        PolyQ lhs = build_lambda<GaussRational>(s.order).apply(apply_toeplitz_poly(s, f));
        PolyQ rhs = dphi.apply(f);
        if (lhs == rhs) return true;
        msg = "ladder relation violated for a random order-" + std::to_string(s.order) + " symbol";
        return false;
    }));

    // Top coefficient equals the tilde transform; the subleading one equals
    // (n+1) * tilde' - tilde of the z-derivative of the symbol.
    out.suites.push_back(run_suite("leading-terms", N, opt.seed + 1, [](Rng& g, int, std::string& msg) {
        SymbolQ s = rand_symbol(g, 4, 4);
        const int n = s.order;
        DiffOpQ dphi = build_dphi(s);
        if (dphi.order() != n) {
            msg = "operator order " + std::to_string(dphi.order()) + " != " + std::to_string(n);
            return false;
        }
        auto [top, sub] = leading_terms(dphi);
        PolyQ tl = tilde(s, n);
        if (top != tl) {
            msg = "top coefficient differs from the tilde transform";
            return false;
        }
        PolyQ expect = TQ::from_int(n + 1) * tl.derivative() - tilde(dz_derivative(s), n);
        if (sub != expect) {
            msg = "subleading coefficient formula violated";
            return false;
        }
        return true;
    }));

    // Shift calculus: D^n composed with multiplication by (z-w)^n equals the
    // ordered product prod_{i=1..n} ((z-w)D + i).
    out.suites.push_back(run_suite("shift-calculus", N, opt.seed + 2, [](Rng& g, int c, std::string& msg) {
        GaussRational w = rand_gauss(g);
        int n = 1 + c % 5;
        PolyQ lin({-w, TQ::one()});
        DiffOpQ lhs = DiffOpQ::mult(lin.pow(n));
        for (int k = 0; k < n; ++k) lhs = d_compose(lhs);
        DiffOpQ rhs = DiffOpQ::identity();
        for (int i = 1; i <= n; ++i)
            rhs = compose(rhs, DiffOpQ({PolyQ::constant(TQ::from_int(i)), lin}));
        if (lhs == rhs) return true;
        msg = "shift identity violated at n=" + std::to_string(n);
        return false;
    }));

    // Factorization for the binomial symbol (conj(z)+v)^n: the attached
    // operator is v^n * prod_{i=1..n} ((z-w)D + 2 + (i-1)) with w = -1/v.
    out.suites.push_back(run_suite("binomial-factorization", N, opt.seed + 3, [](Rng& g, int c, std::string& msg) {
        GaussRational v = rand_gauss(g);
        if (v.is_zero()) v = TQ::one();
        int n = 1 + c % 4;
        std::vector<PolyQ> a(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i)
            a[static_cast<std::size_t>(i)] = PolyQ::constant(
                TQ::from_int(binom_long(n, i)) * gauss_pow(v, n - i));
        DiffOpQ lhs = build_dphi(SymbolQ(n, std::move(a)));
        GaussRational w = -(TQ::one() / v);
        PolyQ lin({-w, TQ::one()});
        DiffOpQ rhs = DiffOpQ::identity();
        for (int i = 1; i <= n; ++i)
            rhs = compose(rhs, DiffOpQ({PolyQ::constant(TQ::from_int(i + 1)), lin}));
        rhs = gauss_pow(v, n) * rhs;
        if (lhs == rhs) return true;
        msg = "binomial factorization violated at n=" + std::to_string(n);
        return false;
    }));

    // Products prod(zD + b_k) expand with top coefficient z^r and subleading
    // coefficient (sum b_k + r(r-1)/2) z^(r-1).
    out.suites.push_back(run_suite("ladder-expansion", N, opt.seed + 4, [](Rng& g, int c, std::string& msg) {
        int r = 2 + c % 4;
        GaussRational sum = TQ::zero();
        DiffOpQ prod = DiffOpQ::identity();
        for (int k = 0; k < r; ++k) {
            GaussRational b = rand_gauss(g);
            sum = sum + b;
            prod = compose(prod, DiffOpQ({PolyQ::constant(b), PolyQ::monomial(1, TQ::one())}));
        }
        if (prod.order() != r) {
            msg = "product order wrong";
            return false;
        }
        PolyQ top_expect = PolyQ::monomial(r, TQ::one());
        PolyQ sub_expect = PolyQ::monomial(
            r - 1, sum + TQ::from_int(static_cast<long>(r) * (r - 1) / 2));
        if (prod.coeff(r) != top_expect || prod.coeff(r - 1) != sub_expect) {
            msg = "top-two expansion coefficients violated at r=" + std::to_string(r);
            return false;
        }
        return true;
    }));

    // Three independent first-order kernel routes must produce the same
    // exponent at a simple interior zero: the indicial root, minus the residue
    // of c0/c1, and (residue of tilde(d phi/dz)/tilde) - 2.
    out.suites.push_back(run_suite("three-routes", N, opt.seed + 5, [](Rng& g, int c, std::string& msg) {
        std::uniform_int_distribution<int> num(-3, 3), den(5, 9), outer(2, 5);
        GaussRational w{Rational(0), Rational(0)};
        while (w.is_zero() || w.norm2() >= Rational(9, 16))
            w = GaussRational{Rational(num(g), den(g)), Rational(num(g), den(g))};
        PolyQ tl({TQ::one(), -(TQ::one() / w)});  // 1 - z/w
        for (int j = 0; j < c % 3; ++j) {
            GaussRational rho{Rational(outer(g)), Rational(num(g))};
            tl = tl * PolyQ({TQ::one(), -(TQ::one() / rho)});
        }
        // f = (tilde - 1)/z, so the symbol conj(z) + f(z) has this tilde.
        std::vector<GaussRational> fc(static_cast<std::size_t>(tl.degree()));
        for (int k = 1; k <= tl.degree(); ++k) fc[static_cast<std::size_t>(k - 1)] = tl.coeff(k);
        SymbolQ s(1, {PolyQ(std::move(fc)), PolyQ::constant(TQ::one())});
        DiffOpQ dphi = build_dphi(s);
        if (tilde(s, 1) != tl) {
            msg = "tilde reconstruction failed";
            return false;
        }

        IndicialData<GaussRational> ind = indicial(dphi, w);
        if (ind.indicial.degree() != 1) {
            msg = "indicial polynomial is not linear at a simple zero";
            return false;
        }
        GaussRational root_a = -(ind.indicial.coeff(0) / ind.indicial.coeff(1));

        auto [c1, c0] = leading_terms(dphi);
        GaussRational root_b = -laurent(c0, c1, w, -1).residue();

        PolyQ dnum = tilde(dz_derivative(s), 1);
        GaussRational root_c = laurent(dnum, tl, w, -1).residue() - TQ::from_int(2);

        if (root_a == root_b && root_a == root_c) return true;
        msg = "routes disagree: " + to_string(root_a) + " vs " + to_string(root_b) + " vs " +
              to_string(root_c);
        return false;
    }));

    // Float-side oracle: the projection rule against contour-integral
    // quadrature on random polynomials.
    out.suites.push_back(run_suite("quadrature", std::min(N, 20), opt.seed + 6, [](Rng& g, int, std::string& msg) {
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        int d = std::uniform_int_distribution<int>(0, 6)(g);
        std::vector<std::complex<double>> c(static_cast<std::size_t>(d) + 1);
        for (auto& v : c) v = {u(g), u(g)};
        double resid = quadrature_check(PolyC(std::move(c)));
        if (resid < 1e-10) return true;
        std::ostringstream os;
        os << "quadrature residual " << resid;
        msg = os.str();
        return false;
    }));

    // Finite sections respect the adjoint: the section of the conjugate
    // symbol equals the conjugate transpose of the section.
    out.suites.push_back(run_suite("adjoint-sections", std::min(N, 20), opt.seed + 7, [](Rng& g, int, std::string& msg) {
        SymbolQ s = rand_symbol(g, 3, 3);
        int np = s.max_poly_degree();
        std::vector<PolyQ> adj(static_cast<std::size_t>(np) + 1);
        for (int k = 0; k <= np; ++k) {
            std::vector<GaussRational> col(static_cast<std::size_t>(s.order) + 1);
            for (int i = 0; i <= s.order; ++i) col[static_cast<std::size_t>(i)] = s.a(i).coeff(k).conj();
            adj[static_cast<std::size_t>(k)] = PolyQ(std::move(col));
        }
        TruncatedToeplitz m1 = truncate(s, 12);
        TruncatedToeplitz m2 = truncate(SymbolQ(np, std::move(adj)), 12);
        double err = (m2.mat - m1.mat.adjoint()).cwiseAbs().maxCoeff();
        if (err < 1e-12) return true;
        std::ostringstream os;
        os << "adjoint mismatch " << err;
        msg = os.str();
        return false;
    }));

    return out;
}

std::string selftest_to_text(const SelftestResult& r) {
    std::ostringstream os;
    for (const SuiteResult& s : r.suites) {
        os << (s.failures ? "[FAIL] " : "[ ok ] ") << s.name << ": " << (s.cases - s.failures)
           << "/" << s.cases << " cases\n";
        for (const std::string& m : s.messages) os << "       " << m << "\n";
    }
    os << (r.ok() ? "selftest: all suites passed\n" : "selftest: FAILURES detected\n");
    return os.str();
}

}  // namespace polytoep
