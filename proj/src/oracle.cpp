#include "polytoep/oracle.hpp"

#include <Eigen/SVD>

#include <cmath>

#include "polytoep/errors.hpp"

namespace polytoep {

std::vector<double> smallest_singular_values(const TruncatedToeplitz& t, int count) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(t.mat);
    const auto& sv = svd.singularValues();  // descending
    std::vector<double> out;
    int take = std::min<int>(count, static_cast<int>(sv.size()));
    for (int i = 0; i < take; ++i) out.push_back(sv(static_cast<int>(sv.size()) - 1 - i));
    return out;
}

KernelProbe kernel_probe_on(const std::vector<ProbeSizeRecord>& records) {
    if (records.empty()) throw ValidationError("kernel_probe needs at least one size");
    KernelProbe probe;
    probe.per_size = records;

    const std::size_t tracked = records.back().sigma.size();
    auto decayed = [&](std::size_t j) {
        for (const auto& r : records)
            if (j >= r.sigma.size()) return false;
        double last = records.back().sigma[j];
        if (!(last < tol::probe_tiny)) return false;
        for (std::size_t i = 1; i < records.size(); ++i) {
            double prev = records[i - 1].sigma[j], cur = records[i].sigma[j];
            if (cur > std::max(prev / tol::probe_decay, tol::probe_sat)) return false;
        }
        return true;
    };

    std::size_t k = 0;
    while (k < tracked && decayed(k)) ++k;
    if (k == tracked && tracked >= 4)
        throw ConvergenceAmbiguous("all tracked singular values decay; kernel may exceed the window");
    if (k < tracked) {
        double next_final = records.back().sigma[k];
        if (!(next_final > tol::probe_floor))
            throw ConvergenceAmbiguous("singular value neither decays cleanly nor stays above the gap floor");
    }
    probe.estimated_kernel_dim = static_cast<int>(k);
    return probe;
}

namespace {

// Gauss-Legendre nodes/weights on [0,1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(static_cast<std::size_t>(n), 0.0);
    w.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));  // root guess on [-1,1]
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            double step = p1 / dp;
            t -= step;
            if (std::abs(step) < 1e-15) break;
        }
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        x[static_cast<std::size_t>(i)] = 0.5 * (t + 1.0);
        w[static_cast<std::size_t>(i)] = 1.0 / ((1.0 - t * t) * dp * dp);
    }
}

}  // namespace

double quadrature_check(const PolyC& f) {
    SymbolC zbar(1, {PolyC(), PolyC::constant({1.0, 0.0})});
    PolyC projected = apply_toeplitz_poly(zbar, f);
    PolyC fp = f.derivative();

    std::vector<double> xs, ws;
    gauss_legendre(48, xs, ws);

    double worst = 0;
    for (double r : {0.3, 0.6, 0.9}) {
        for (int a = 0; a < 12; ++a) {
            double th = 2.0 * M_PI * a / 12 + 0.1;
            std::complex<double> z = r * std::complex<double>(std::cos(th), std::sin(th));
            // (1/z^2) * integral_0^z w f'(w) dw along the segment w = t z.
            std::complex<double> acc = 0;
            for (std::size_t i = 0; i < xs.size(); ++i)
                acc += ws[i] * xs[i] * fp(xs[i] * z);
            // z^2 * integral t f'(t z) dt / z^2 = integral t f'(t z) dt
            std::complex<double> viaintegral = acc;
            std::complex<double> viaprojection = projected(z);
            worst = std::max(worst, std::abs(viaintegral - viaprojection));
        }
    }
    return worst;
}

}  // namespace polytoep
