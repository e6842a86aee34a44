// Acceptance gate: end-to-end checks of the analyzer against exact operator
// identities, designed instances with known kernel data, and the independent
// finite-section probe. One [PASS]/[FAIL] line per criterion; exit 0 iff all
// pass. Every numeric threshold used here is pinned below.

#include <complex>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polytoep/criteria.hpp"

using namespace polytoep;

namespace {

// Pinned acceptance tolerances. Criteria 5-7 additionally rely on the
// library's pinned probe thresholds (decay factor 4 per size step, final
// value < 1e-6, gap floor 1e-3, saturation waiver 1e-12).
constexpr double kQuadratureResidual = 1e-10;  // criterion 8
constexpr double kSigmaStableRel = 0.20;       // criterion 6a: sigma_min drift bound
constexpr double kRootRejectBand = 0.05;       // criterion 9: keep roots off the circle

using Rng = std::mt19937_64;
using TQ = ScalarTraits<GaussRational>;

GaussRational q(long n, long d = 1) { return GaussRational{Rational(n, d), Rational(0)}; }

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

SymbolQ rand_symbol(Rng& g, int max_order, int maxdeg) {
    int n = std::uniform_int_distribution<int>(1, max_order)(g);
    std::vector<PolyQ> a(static_cast<std::size_t>(n) + 1);
    for (auto& p : a) p = rand_poly(g, maxdeg);
    if (a.back().coeff(0).is_zero()) a.back() = a.back() + PolyQ::constant(TQ::one());
    return SymbolQ(n, std::move(a));
}

GaussRational rand_interior_point(Rng& g) {
    std::uniform_int_distribution<int> num(-3, 3), den(5, 9);
    GaussRational w{Rational(0), Rational(0)};
    while (w.is_zero() || w.norm2() >= Rational(9, 16))
        w = GaussRational{Rational(num(g), den(g)), Rational(num(g), den(g))};
    return w;
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

// conj(z)^n + 1/2: associated polynomial z^n/2 + 1, zero-free on the disc.
SymbolQ zerofree_symbol(int n) {
    std::vector<PolyQ> a(static_cast<std::size_t>(n) + 1);
    a[0] = PolyQ::constant(q(1, 2));
    a[static_cast<std::size_t>(n)] = PolyQ::constant(q(1));
    return SymbolQ(n, std::move(a));
}

// phi = (z-w)^n psi(z) + (conj z - 1/w)^n as an order-n symbol.
SymbolQ full_multiplicity_symbol(int n, const GaussRational& w, const PolyQ& psi) {
    GaussRational v = -(TQ::one() / w);
    std::vector<PolyQ> a(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i)
        a[static_cast<std::size_t>(i)] =
            PolyQ::constant(TQ::from_int(binom_long(n, i)) * gauss_pow(v, n - i));
    a[0] = PolyQ({-w, TQ::one()}).pow(n) * psi + PolyQ::constant(gauss_pow(v, n));
    return SymbolQ(n, std::move(a));
}

// First-order symbol conj(z) + f with a designed simple interior zero of its
// associated polynomial at w = 4/5 and residue exactly 2 there: the cofactor
// U(z) = (1 - z (1-3i)/4)^4 (1 - z (49-168i)/250) has all roots outside the
// closed disc and satisfies U(4/5) = -1, so 1 - 1/U(w) = 2.
SymbolQ designed_kernel_one_symbol() {
    PolyQ lw({q(1), q(-5, 4)});
    PolyQ l1({q(1), GaussRational{Rational(-1, 4), Rational(3, 4)}});
    PolyQ l5({q(1), GaussRational{Rational(-49, 250), Rational(168, 250)}});
    PolyQ t = lw * l1.pow(4) * l5;
    auto [f, rem] = (t - PolyQ::constant(q(1))).div_linear(q(0));
    if (!rem.is_zero() || !t(q(4, 5)).is_zero())
        throw InternalInconsistency("designed instance construction broke");
    return SymbolQ(1, {f, PolyQ::constant(q(1))});
}

bool has_rule(const AnalysisReport& r, const std::string& rule) {
    for (const ClaimRecord& c : r.provenance)
        if (c.rule == rule) return true;
    return false;
}

bool probe_matches(const AnalysisReport& r, int expected) {
    return r.oracle && !r.oracle->ambiguous && r.oracle->estimated_dim &&
           *r.oracle->estimated_dim == expected;
}

int g_failures = 0;

template <class F>
void criterion(const std::string& label, const std::string& title, F&& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << label << ": " << title;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

}  // namespace

int main() {
    criterion("1", "ladder(T_phi f) equals D_phi f exactly on 200 random symbol/argument pairs",
              [](std::string& detail) {
                  Rng g(101);
                  for (int c = 0; c < 200; ++c) {
                      SymbolQ s = rand_symbol(g, 4, 4);
                      PolyQ f = rand_poly(g, 6);
                      if (f.is_zero()) f = PolyQ::constant(TQ::one());
                      PolyQ lhs =
                          build_lambda<GaussRational>(s.order).apply(apply_toeplitz_poly(s, f));
                      PolyQ rhs = build_dphi(s).apply(f);
                      if (!(lhs == rhs)) {
                          detail = "identity violated at case " + std::to_string(c);
                          return false;
                      }
                  }
                  return true;
              });

    criterion("2",
              "top coefficient of D_phi is the associated polynomial and the subleading one is "
              "(n+1) tilde' - tilde(d phi/dz), exactly, on 100 random symbols",
              [](std::string& detail) {
                  Rng g(102);
                  for (int c = 0; c < 100; ++c) {
                      SymbolQ s = rand_symbol(g, 4, 4);
                      const int n = s.order;
                      DiffOpQ dphi = build_dphi(s);
                      auto [top, sub] = leading_terms(dphi);
                      PolyQ tl = tilde(s, n);
                      PolyQ expect = TQ::from_int(n + 1) * tl.derivative() - tilde(dz_derivative(s), n);
                      if (dphi.order() != n || top != tl || sub != expect) {
                          detail = "coefficient formula violated at case " + std::to_string(c);
                          return false;
                      }
                  }
                  return true;
              });

    criterion("3",
              "operator identities hold exactly: shift calculus, binomial factorization, and the "
              "two-term ladder expansion (n <= 4, five random points each)",
              [](std::string& detail) {
                  Rng g(103);
                  for (int n = 1; n <= 4; ++n)
                      for (int rep = 0; rep < 5; ++rep) {
                          GaussRational w = rand_gauss(g);
                          PolyQ lin({-w, TQ::one()});
                          DiffOpQ lhs = DiffOpQ::mult(lin.pow(n));
                          for (int k = 0; k < n; ++k) lhs = d_compose(lhs);
                          DiffOpQ rhs = DiffOpQ::identity();
                          for (int i = 1; i <= n; ++i)
                              rhs = compose(rhs, DiffOpQ({PolyQ::constant(TQ::from_int(i)), lin}));
                          if (!(lhs == rhs)) {
                              detail = "shift calculus violated at n=" + std::to_string(n);
                              return false;
                          }
                      }
                  for (int n = 1; n <= 4; ++n)
                      for (int rep = 0; rep < 5; ++rep) {
                          GaussRational v = rand_gauss(g);
                          if (v.is_zero()) v = TQ::one();
                          std::vector<PolyQ> a(static_cast<std::size_t>(n) + 1);
                          for (int i = 0; i <= n; ++i)
                              a[static_cast<std::size_t>(i)] = PolyQ::constant(
                                  TQ::from_int(binom_long(n, i)) * gauss_pow(v, n - i));
                          DiffOpQ lhs = build_dphi(SymbolQ(n, std::move(a)));
                          GaussRational w = -(TQ::one() / v);
                          PolyQ lin({-w, TQ::one()});
                          DiffOpQ rhs = DiffOpQ::identity();
                          for (int i = 1; i <= n; ++i)
                              rhs = compose(rhs,
                                            DiffOpQ({PolyQ::constant(TQ::from_int(i + 1)), lin}));
                          rhs = gauss_pow(v, n) * rhs;
                          if (!(lhs == rhs)) {
                              detail = "binomial factorization violated at n=" + std::to_string(n);
                              return false;
                          }
                      }
                  for (int r = 2; r <= 5; ++r)
                      for (int rep = 0; rep < 5; ++rep) {
                          GaussRational sum = TQ::zero();
                          DiffOpQ prod = DiffOpQ::identity();
                          for (int k = 0; k < r; ++k) {
                              GaussRational b = rand_gauss(g);
                              sum = sum + b;
                              prod = compose(prod, DiffOpQ({PolyQ::constant(b),
                                                            PolyQ::monomial(1, TQ::one())}));
                          }
                          PolyQ top_expect = PolyQ::monomial(r, TQ::one());
                          PolyQ sub_expect = PolyQ::monomial(
                              r - 1, sum + TQ::from_int(static_cast<long>(r) * (r - 1) / 2));
                          if (prod.order() != r || prod.coeff(r) != top_expect ||
                              prod.coeff(r - 1) != sub_expect) {
                              detail = "ladder expansion violated at r=" + std::to_string(r);
                              return false;
                          }
                      }
                  return true;
              });

    criterion("4",
              "closed-form indicial polynomial is exactly proportional to the machine normal form "
              "for full-multiplicity symbols (n = 1..4, random interior points, psi of degree <= 2)",
              [](std::string& detail) {
                  Rng g(104);
                  for (int n = 1; n <= 4; ++n)
                      for (int rep = 0; rep < 5; ++rep) {
                          GaussRational w = rand_interior_point(g);
                          PolyQ psi = rand_poly(g, 2);
                          SymbolQ s = full_multiplicity_symbol(n, w, psi);
                          IndicialData<GaussRational> ind = indicial(build_dphi(s), w);
                          PolyQ cf = closed_form_indicial(n, w, psi(w));
                          if (!poly_proportional(cf, ind.indicial)) {
                              detail = "proportionality violated at n=" + std::to_string(n);
                              return false;
                          }
                      }
                  return true;
              });

    criterion("5",
              "conj(z)^n + 1/2 has kernel dimension exactly n, is onto, and the finite-section "
              "probe counts n decaying singular values (n = 1, 2, 3)",
              [](std::string& detail) {
                  AnalyzeOptions opt;
                  opt.with_oracle = true;
                  opt.probe_sizes = {32, 64, 128, 256};
                  for (int n = 1; n <= 3; ++n) {
                      AnalysisReport r = analyze(zerofree_symbol(n), opt);
                      if (!(r.kernel_dim_exact && *r.kernel_dim_exact == n &&
                            r.surjective == true && probe_matches(r, n))) {
                          detail = "failed at n=" + std::to_string(n);
                          return false;
                      }
                  }
                  return true;
              });

    criterion("6a",
              "conj(z) - 2 is invertible; no singular value decays and sigma_min stays stable "
              "within 20% across sizes 64/128/256",
              [](std::string& detail) {
                  SymbolQ s(1, {PolyQ::constant(q(-2)), PolyQ::constant(q(1))});
                  AnalyzeOptions opt;
                  opt.with_oracle = true;
                  opt.probe_sizes = {64, 128, 256};
                  AnalysisReport r = analyze(s, opt);
                  if (r.verdict != Verdict::Invertible || !probe_matches(r, 0)) {
                      detail = "verdict or probe count wrong";
                      return false;
                  }
                  double lo = 1e300, hi = 0;
                  for (const auto& sig : r.oracle->sigmas) {
                      lo = std::min(lo, sig[0]);
                      hi = std::max(hi, sig[0]);
                  }
                  std::ostringstream os;
                  os << "sigma_min in [" << lo << ", " << hi << "]";
                  detail = os.str();
                  return hi <= (1.0 + kSigmaStableRel) * lo;
              });

    criterion("6b",
              "conj(z) + 3z - 7/2 has index -1 with trivial kernel and cokernel 1; the probe sees "
              "exactly one decaying singular value",
              [](std::string& detail) {
                  SymbolQ s(1, {PolyQ({q(-7, 2), q(3)}), PolyQ::constant(q(1))});
                  AnalyzeOptions opt;
                  opt.with_oracle = true;
                  opt.probe_sizes = {32, 64, 128, 256};
                  AnalysisReport r = analyze(s, opt);
                  bool ok = r.fredholm_index == -1 && r.kernel_dim_exact &&
                            *r.kernel_dim_exact == 0 && r.cokernel_dim == 1 &&
                            r.verdict == Verdict::NotInvertible && probe_matches(r, 1);
                  if (!ok) detail = "index/kernel/cokernel/probe mismatch";
                  return ok;
              });

    criterion("6c",
              "designed residue-2 instance at w = 4/5 has kernel 1 at index 0; symbolic verdict "
              "and one-value probe decay corroborate each other",
              [](std::string& detail) {
                  SymbolQ s = designed_kernel_one_symbol();
                  AnalyzeOptions opt;
                  opt.with_oracle = true;
                  opt.probe_sizes = {32, 64, 128, 256};
                  AnalysisReport r = analyze(s, opt);
                  bool ok = r.fredholm_index == 0 && r.kernel_dim_exact &&
                            *r.kernel_dim_exact == 1 && r.cokernel_dim == 1 &&
                            r.surjective == false && r.verdict == Verdict::NotInvertible &&
                            probe_matches(r, 1) && has_rule(r, "oracle-corroboration") &&
                            has_rule(r, "simple-zero-residue");
                  if (!ok) detail = "kernel-one instance not fully corroborated";
                  return ok;
              });

    criterion("7",
              "construction a z^n (z-w)^m + (conj z - 1/w)^m flips invertibility exactly at "
              "|a||w|^m = 1, with probe counts matching the cokernel on both sides (m = 1 and 2)",
              [](std::string& detail) {
                  GaussRational w = q(1, 2);
                  AnalyzeOptions small;
                  small.with_oracle = true;
                  small.probe_sizes = {64, 128, 256};

                  for (auto a : {q(1, 2), q(1), q(19, 10)}) {
                      AnalysisReport r = corollary_example(a, w, 1, 1, small);
                      if (r.verdict != Verdict::Invertible || !probe_matches(r, 0)) {
                          detail = "below-threshold case not invertible";
                          return false;
                      }
                  }
                  {
                      AnalysisReport r = corollary_example(q(2), w, 1, 1);
                      if (r.verdict != Verdict::NotFredholm || r.boundary_status != "on-circle") {
                          detail = "threshold case |a||w| = 1 not boundary-degenerate";
                          return false;
                      }
                  }
                  {
                      AnalyzeOptions big;
                      big.with_oracle = true;
                      big.probe_sizes = {256, 512, 1024};  // decay base |w|/root is slow here
                      AnalysisReport r = corollary_example(q(21, 10), w, 1, 1, big);
                      if (!(r.fredholm_index == -2 && r.cokernel_dim == 2 && probe_matches(r, 2))) {
                          detail = "just-above-threshold case (a = 21/10) wrong";
                          return false;
                      }
                  }
                  {
                      AnalysisReport r = corollary_example(q(4), w, 1, 1, small);
                      if (!(r.fredholm_index == -2 && r.cokernel_dim == 2 && probe_matches(r, 2))) {
                          detail = "far-above-threshold case (a = 4) wrong";
                          return false;
                      }
                  }
                  for (auto a : {q(3)}) {  // m = 2: |a| |w|^2 = 3/4 < 1
                      AnalysisReport r = corollary_example(a, w, 1, 2, small);
                      if (r.verdict != Verdict::Invertible || !probe_matches(r, 0)) {
                          detail = "m = 2 below-threshold case not invertible";
                          return false;
                      }
                  }
                  {
                      AnalyzeOptions mid;
                      mid.with_oracle = true;
                      mid.probe_sizes = {128, 256, 512};
                      AnalysisReport r = corollary_example(q(9, 2), w, 1, 2, mid);
                      if (!(r.fredholm_index == -3 && r.cokernel_dim == 3 && probe_matches(r, 3))) {
                          detail = "m = 2 above-threshold case (a = 9/2) wrong";
                          return false;
                      }
                  }
                  return true;
              });

    criterion("8",
              "projection rule matches contour-integral quadrature within 1e-10 on 20 random "
              "polynomials of degree <= 6",
              [](std::string& detail) {
                  Rng g(108);
                  std::uniform_real_distribution<double> u(-2.0, 2.0);
                  double worst = 0;
                  for (int c = 0; c < 20; ++c) {
                      int d = std::uniform_int_distribution<int>(0, 6)(g);
                      std::vector<std::complex<double>> coef(static_cast<std::size_t>(d) + 1);
                      for (auto& v : coef) v = {u(g), u(g)};
                      worst = std::max(worst, quadrature_check(PolyC(std::move(coef))));
                  }
                  std::ostringstream os;
                  os << "worst residual " << worst;
                  detail = os.str();
                  return worst < kQuadratureResidual;
              });

    criterion("9",
              "sampled boundary winding equals the multiplicity-weighted zero census minus the "
              "order on 100 random symbols with roots clear of the circle",
              [](std::string& detail) {
                  Rng g(109);
                  int done = 0, attempts = 0;
                  while (done < 100 && attempts < 3000) {
                      ++attempts;
                      SymbolQ s = rand_symbol(g, 4, 3);
                      PolyQ t = tilde(s);
                      if (t.is_zero()) continue;
                      bool near_circle = false;
                      if (t.degree() >= 1)
                          for (const RootCluster& r : roots(t))
                              if (std::abs(std::abs(r.value) - 1.0) < kRootRejectBand)
                                  near_circle = true;
                      if (near_circle) continue;
                      IndexData d = index_data(s);  // throws on census/sampling disagreement
                      if (!d.winding || *d.winding != d.disc_zero_count - s.order) {
                          detail = "winding bookkeeping broke at accepted case " +
                                   std::to_string(done);
                          return false;
                      }
                      ++done;
                  }
                  std::ostringstream os;
                  os << done << " cases in " << attempts << " draws";
                  detail = os.str();
                  return done == 100;
              });

    criterion("10",
              "three independent kernel routes (indicial root, -residue of c0/c1, residue of "
              "tilde(d phi/dz)/tilde minus 2) agree exactly on 100 first-order instances",
              [](std::string& detail) {
                  Rng g(110);
                  for (int c = 0; c < 100; ++c) {
                      GaussRational w = rand_interior_point(g);
                      PolyQ tl({TQ::one(), -(TQ::one() / w)});
                      std::uniform_int_distribution<int> outer(2, 5), num(-3, 3);
                      for (int j = 0; j < c % 3; ++j) {
                          GaussRational rho{Rational(outer(g)), Rational(num(g))};
                          tl = tl * PolyQ({TQ::one(), -(TQ::one() / rho)});
                      }
                      std::vector<GaussRational> fc(static_cast<std::size_t>(tl.degree()));
                      for (int k = 1; k <= tl.degree(); ++k)
                          fc[static_cast<std::size_t>(k - 1)] = tl.coeff(k);
                      SymbolQ s(1, {PolyQ(std::move(fc)), PolyQ::constant(TQ::one())});
                      DiffOpQ dphi = build_dphi(s);

                      IndicialData<GaussRational> ind = indicial(dphi, w);
                      GaussRational root_a = -(ind.indicial.coeff(0) / ind.indicial.coeff(1));
                      auto [c1, c0] = leading_terms(dphi);
                      GaussRational root_b = -laurent(c0, c1, w, -1).residue();
                      GaussRational root_c =
                          laurent(tilde(dz_derivative(s), 1), tl, w, -1).residue() -
                          TQ::from_int(2);
                      if (!(root_a == root_b && root_a == root_c)) {
                          detail = "routes disagree at case " + std::to_string(c);
                          return false;
                      }
                  }
                  return true;
              });

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
