#include "doctest.h"
#include "polytoep/symbol.hpp"

using namespace polytoep;

namespace {
GaussRational q(long n, long d = 1) { return GaussRational{Rational(n, d), Rational(0)}; }
}

TEST_CASE("tilde transform interleaves coefficients with falling powers") {
    // conj(z) - 2: coefficients a0 = -2, a1 = 1 -> tilde = -2z + 1
    SymbolQ s(1, {PolyQ::constant(q(-2)), PolyQ::constant(q(1))});
    CHECK(tilde(s) == PolyQ({q(1), q(-2)}));
    // padding the declared order shifts everything up by one power of z
    CHECK(tilde(s, 2) == PolyQ({q(0), q(1), q(-2)}));
    CHECK_THROWS_AS(tilde(s, 0), OrderTooSmall);
}

TEST_CASE("effective order ignores trailing zero coefficients") {
    SymbolQ s(3, {PolyQ::constant(q(1)), PolyQ::constant(q(1)), PolyQ(), PolyQ()});
    CHECK(s.order == 3);
    CHECK(s.effective_order() == 1);
    CHECK_FALSE(s.canonical());
}

TEST_CASE("index data: zero-free tilde gives winding minus order") {
    // conj(z)^2 + 1/4: tilde = z^2/4 + 1, roots at |z| = 2 (outside)
    SymbolQ s(2, {PolyQ::constant(q(1, 4)), PolyQ(), PolyQ::constant(q(1))});
    IndexData d = index_data(s);
    REQUIRE(d.winding.has_value());
    CHECK(*d.winding == -2);
    CHECK(*d.fredholm_index == 2);
    CHECK(d.disc_zero_count == 0);
}

TEST_CASE("index data: interior zero raises the winding") {
    SymbolQ s(1, {PolyQ::constant(q(-2)), PolyQ::constant(q(1))});  // zero at 1/2
    IndexData d = index_data(s);
    REQUIRE(d.winding.has_value());
    CHECK(*d.winding == 0);
    CHECK(*d.fredholm_index == 0);
    CHECK(d.disc_zero_count == 1);
}

TEST_CASE("boundary root flags ambiguity instead of guessing") {
    SymbolQ s(1, {PolyQ::constant(q(-1)), PolyQ::constant(q(1))});  // tilde zero at 1
    IndexData d = index_data(s);
    CHECK(d.boundary_ambiguous);
    CHECK_FALSE(d.winding.has_value());
}

TEST_CASE("identically zero tilde is rejected") {
    SymbolQ s(1, {PolyQ(), PolyQ()});
    CHECK_THROWS_AS(index_data(s), ValidationError);
}

TEST_CASE("symbol evaluation matches the tilde boundary identity") {
    // On |z| = 1: symbol = conj(z)^n * tilde(z).
    SymbolQ s(2, {PolyQ({q(1), q(2)}), PolyQ::constant(q(-1, 3)), PolyQ({q(0), q(1)})});
    SymbolC f = to_float(s);
    PolyC t = to_float(tilde(s));
    for (double th : {0.3, 1.1, 2.8, 4.0}) {
        std::complex<double> z = std::polar(1.0, th);
        std::complex<double> lhs = eval_symbol(f, z);
        std::complex<double> rhs = std::pow(std::conj(z), 2) * t(z);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("scalar shift moves only the analytic part") {
    SymbolQ s(1, {PolyQ::constant(q(-2)), PolyQ::constant(q(1))});
    SymbolQ sh = shift_by_scalar(s, q(3));
    CHECK(sh.a(0) == PolyQ::constant(q(-5)));
    CHECK(sh.a(1) == s.a(1));
}

TEST_CASE("z-derivative keeps the declared order") {
    SymbolQ s(2, {PolyQ({q(1), q(5)}), PolyQ::constant(q(7)), PolyQ({q(0), q(0), q(1)})});
    SymbolQ d = dz_derivative(s);
    CHECK(d.order == 2);
    CHECK(d.a(0) == PolyQ::constant(q(5)));
    CHECK(d.a(1).is_zero());
    CHECK(d.a(2) == PolyQ({q(0), q(2)}));
}
