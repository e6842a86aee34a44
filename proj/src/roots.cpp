#include "polytoep/roots.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "polytoep/errors.hpp"

namespace polytoep {
namespace {

using C = std::complex<double>;

double eval_scale(const PolyC& p, double r) {
    double s = 0, rp = 1;
    for (int k = 0; k <= p.degree(); ++k) {
        s += std::abs(p.coeff(k)) * rp;
        rp *= r;
    }
    return s;
}

// Simultaneous Aberth–Ehrlich iteration; empty result means "did not settle".
std::vector<C> aberth(const PolyC& p) {
    const int d = p.degree();
    const PolyC dp = p.derivative();
    const double lead = std::abs(p.leading());
    double maxc = 0;
    for (int k = 0; k < d; ++k) maxc = std::max(maxc, std::abs(p.coeff(k)));
    const double cauchy = 1.0 + maxc / lead;
    double r0 = std::pow(std::abs(p.coeff(0)) / lead + 1e-300, 1.0 / d);
    const double rad = std::min(cauchy, std::max(0.25, r0));

    std::vector<C> z(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        double th = 2.0 * M_PI * i / d + 0.376;
        z[static_cast<std::size_t>(i)] = rad * C(std::cos(th), std::sin(th));
    }

    for (int iter = 0; iter < 240; ++iter) {
        bool settled = true;
        for (int i = 0; i < d; ++i) {
            C zi = z[static_cast<std::size_t>(i)];
            C pv = p(zi);
            if (std::abs(pv) <= 1e-15 * eval_scale(p, std::abs(zi))) continue;
            C dv = dp(zi);
            if (std::abs(dv) == 0.0) {
                z[static_cast<std::size_t>(i)] = zi + C(1e-6, 1e-6) * (1.0 + std::abs(zi));
                settled = false;
                continue;
            }
            C w = pv / dv;
            C sum = 0;
            bool collided = false;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                C diff = zi - z[static_cast<std::size_t>(j)];
                if (std::abs(diff) < 1e-300) {
                    collided = true;
                    break;
                }
                sum += 1.0 / diff;
            }
            if (collided) {
                z[static_cast<std::size_t>(i)] = zi + C(2e-6, -1e-6) * (1.0 + std::abs(zi));
                settled = false;
                continue;
            }
            C denom = 1.0 - w * sum;
            C corr = (std::abs(denom) < 1e-300) ? w : w / denom;
            z[static_cast<std::size_t>(i)] = zi - corr;
            if (std::abs(corr) > 1e-13 * std::max(1.0, std::abs(zi))) settled = false;
        }
        if (settled) return z;
    }
    return {};
}

std::vector<C> companion_roots(const PolyC& p) {
    const int d = p.degree();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) m(i, d - 1) = -p.coeff(i) / p.leading();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, /*computeEigenvectors=*/false);
    std::vector<C> z(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) z[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    return z;
}

void newton_polish(const PolyC& p, std::vector<C>& z) {
    const PolyC dp = p.derivative();
    for (C& r : z)
        for (int it = 0; it < 3; ++it) {
            C dv = dp(r);
            if (std::abs(dv) < 1e-300) break;
            C step = p(r) / dv;
            if (std::abs(step) > 0.5 * std::max(1.0, std::abs(r))) break;  // multiple root: leave it
            r -= step;
        }
}

std::vector<RootCluster> cluster(const std::vector<C>& z) {
    std::vector<RootCluster> out;
    for (const C& r : z) {
        bool merged = false;
        for (RootCluster& c : out) {
            if (std::abs(r - c.value) <= tol::cluster * std::max(1.0, std::abs(c.value))) {
                // running centroid
                c.value = (c.value * static_cast<double>(c.multiplicity) + r) /
                          static_cast<double>(c.multiplicity + 1);
                ++c.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back({r, 1});
    }
    return out;
}

void certify(const PolyC& p, const std::vector<C>& z) {
    for (const C& r : z) {
        double sc = eval_scale(p, std::abs(r));
        if (std::abs(p(r)) > tol::root_residual * sc)
            throw IllConditioned("root finder could not certify a located root");
    }
}

std::vector<C> locate(const PolyC& p) {
    std::vector<C> z = aberth(p);
    if (z.empty()) z = companion_roots(p);
    newton_polish(p, z);
    return z;
}

}  // namespace

std::vector<RootCluster> roots(const PolyC& p) {
    if (p.is_zero()) throw ValidationError("roots of the zero polynomial");
    // Exactly-zero low coefficients are roots at the origin.
    int zero_ord = 0;
    while (zero_ord <= p.degree() && std::abs(p.coeff(zero_ord)) == 0.0) ++zero_ord;
    std::vector<std::complex<double>> tail;
    for (int k = zero_ord; k <= p.degree(); ++k) tail.push_back(p.coeff(k));
    PolyC q(std::move(tail));

    std::vector<RootCluster> out;
    if (zero_ord > 0) out.push_back({C(0, 0), zero_ord});
    if (q.degree() >= 1) {
        std::vector<C> z = locate(q);
        certify(q, z);
        for (RootCluster& c : cluster(z)) out.push_back(c);
    }
    return out;
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
    auto monic = [](const PolyQ& p) {
        if (p.is_zero()) return p;
        return (ScalarTraits<GaussRational>::one() / p.leading()) * p;
    };
    a = monic(a);
    b = monic(b);
    while (!b.is_zero()) {
        // remainder of a by b
        PolyQ r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            GaussRational f = r.leading() / b.leading();
            PolyQ sub = f * (b * PolyQ::monomial(r.degree() - b.degree(),
                                                 ScalarTraits<GaussRational>::one()));
            r = r - sub;
        }
        a = b;
        b = monic(r);
    }
    return a;
}

std::vector<std::pair<PolyQ, int>> square_free(const PolyQ& p) {
    std::vector<std::pair<PolyQ, int>> out;
    if (p.degree() < 1) return out;
    PolyQ a = poly_gcd(p, p.derivative());
    PolyQ b = p.div_exact(a);
    PolyQ c = p.derivative().div_exact(a);
    PolyQ d = c - b.derivative();
    int i = 1;
    while (b.degree() >= 1) {
        PolyQ g = poly_gcd(b, d);
        if (g.degree() >= 1) out.emplace_back(g, i);
        b = b.div_exact(g);
        c = d.div_exact(g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

std::vector<RootCluster> roots(const PolyQ& p) {
    if (p.is_zero()) throw ValidationError("roots of the zero polynomial");
    std::vector<RootCluster> out;
    for (const auto& [factor, mult] : square_free(p)) {
        PolyC f = to_float(factor);
        if (f.degree() < 1) continue;
        for (const RootCluster& c : roots(f))
            out.push_back({c.value, c.multiplicity * mult});
    }
    return out;
}

}  // namespace polytoep
