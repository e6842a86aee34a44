#include <algorithm>

#include "doctest.h"
#include "polytoep/roots.hpp"
#include "polytoep/snap.hpp"

using namespace polytoep;

namespace {
GaussRational q(long n, long d = 1) { return GaussRational{Rational(n, d), Rational(0)}; }

bool has_root(const std::vector<RootCluster>& rs, std::complex<double> v, int mult) {
    for (const auto& r : rs)
        if (std::abs(r.value - v) < 1e-8 && r.multiplicity == mult) return true;
    return false;
}
}

TEST_CASE("simple rational roots are located and certified") {
    PolyQ p = PolyQ({q(-1, 2), q(1)}) * PolyQ({q(-2), q(1)});
    auto rs = roots(p);
    REQUIRE(rs.size() == 2);
    CHECK(has_root(rs, {0.5, 0.0}, 1));
    CHECK(has_root(rs, {2.0, 0.0}, 1));
}

TEST_CASE("multiplicities come from the exact square-free split") {
    GaussRational w = q(1, 3);
    PolyQ p = PolyQ({-w, q(1)}).pow(3) * PolyQ({q(5), q(1)});
    auto rs = roots(p);
    REQUIRE(rs.size() == 2);
    CHECK(has_root(rs, {1.0 / 3.0, 0.0}, 3));
    CHECK(has_root(rs, {-5.0, 0.0}, 1));
}

TEST_CASE("complex conjugate pair of an exact real polynomial") {
    PolyQ p({q(1), q(0), q(1)});  // z^2 + 1
    auto rs = roots(p);
    REQUIRE(rs.size() == 2);
    CHECK(has_root(rs, {0.0, 1.0}, 1));
    CHECK(has_root(rs, {0.0, -1.0}, 1));
}

TEST_CASE("square_free recovers the multiplicity structure") {
    PolyQ a({q(-1), q(1)});
    PolyQ b({q(2), q(1)});
    auto sf = square_free(a.pow(2) * b);
    int seen1 = 0, seen2 = 0;
    for (const auto& [f, m] : sf) {
        if (f.degree() < 1) continue;
        if (m == 1) ++seen1;
        if (m == 2) ++seen2;
    }
    CHECK(seen1 == 1);
    CHECK(seen2 == 1);
}

TEST_CASE("float roots of a moderately clustered polynomial") {
    // (z - 0.9)(z - 0.91)(z + 2): distinct, but close
    PolyC p = PolyC({{-0.9, 0}, {1, 0}}) * PolyC({{-0.91, 0}, {1, 0}}) * PolyC({{2, 0}, {1, 0}});
    auto rs = roots(p);
    int total = 0;
    for (const auto& r : rs) total += r.multiplicity;
    CHECK(total == 3);
    CHECK(has_root(rs, {-2.0, 0.0}, 1));
}

TEST_CASE("root snapping promotes floating roots to exact ones, verified") {
    PolyQ p = PolyQ({q(-1, 2), q(1)}) * PolyQ({q(-41, 152), q(1)});
    auto s1 = snap_root(p, {0.5000000000001, 0.0});
    REQUIRE(s1.has_value());
    CHECK(*s1 == q(1, 2));
    auto s2 = snap_root(p, {41.0 / 152.0, 0.0});
    REQUIRE(s2.has_value());
    CHECK(*s2 == q(41, 152));
    CHECK_FALSE(snap_root(p, {0.3, 0.0}).has_value());  // not a root: rejected
}

TEST_CASE("gaussian-rational roots snap componentwise") {
    GaussRational w{Rational(1, 3), Rational(-2, 5)};
    PolyQ p = PolyQ({-w, q(1)}) * PolyQ({q(-3), q(1)});
    auto rs = roots(p);
    bool found = false;
    for (const auto& r : rs) {
        auto sn = snap_root(p, r.value);
        if (sn && *sn == w) found = true;
    }
    CHECK(found);
}
