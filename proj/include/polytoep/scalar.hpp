#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "polytoep/rational.hpp"

namespace polytoep {

// Pinned tolerances for everything the float path decides.
namespace tol {
inline constexpr double integer = 1e-7;        // float integrality test
inline constexpr double cluster = 1e-7;        // relative root clustering radius
inline constexpr double boundary = 1e-9;       // |‖root‖ − 1| ambiguity band
inline constexpr double vanish = 1e-9;         // float coefficient ~ 0, relative
inline constexpr double root_residual = 1e-8;  // certification of located roots
inline constexpr double probe_tiny = 1e-6;     // final singular value counts as kernel
inline constexpr double probe_floor = 1e-3;    // next singular value must stay above
inline constexpr double probe_decay = 4.0;     // required shrink per doubling
inline constexpr double probe_sat = 1e-12;     // decay test waived below this
inline constexpr double quadrature = 1e-10;    // integral-formula residual bound
}  // namespace tol

// The two scalar backends. Algorithms are written against this interface;
// `exact` gates every integrality/zero decision that must not be guessed.
template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussRational> {
    static constexpr bool exact = true;
    static GaussRational zero() { return GaussRational(0); }
    static GaussRational one() { return GaussRational(1); }
    static GaussRational from_int(long v) { return GaussRational(v); }
    static bool is_zero(const GaussRational& v) { return v.is_zero(); }
    static bool negligible(const GaussRational& v, double /*scale*/) { return v.is_zero(); }
    static std::complex<double> to_complex(const GaussRational& v) { return v.to_complex(); }
    static GaussRational conj(const GaussRational& v) { return v.conj(); }
    static double abs(const GaussRational& v) { return std::abs(v.to_complex()); }
    static std::string str(const GaussRational& v) { return to_string(v); }
    // Exact integrality decision.
    static bool integer_value(const GaussRational& v, long& out) {
        if (!v.im.is_zero()) return false;
        if (boost::multiprecision::denominator(v.re) != 1) return false;
        BigInt n = boost::multiprecision::numerator(v.re);
        if (n > std::numeric_limits<long>::max() || n < std::numeric_limits<long>::min())
            return false;
        out = n.template convert_to<long>();
        return true;
    }
};

template <>
struct ScalarTraits<std::complex<double>> {
    using C = std::complex<double>;
    static constexpr bool exact = false;
    static C zero() { return {0.0, 0.0}; }
    static C one() { return {1.0, 0.0}; }
    static C from_int(long v) { return {static_cast<double>(v), 0.0}; }
    static bool is_zero(const C& v) { return v.real() == 0.0 && v.imag() == 0.0; }
    static bool negligible(const C& v, double scale) {
        return std::abs(v) <= tol::vanish * std::max(1.0, scale);
    }
    static std::complex<double> to_complex(const C& v) { return v; }
    static C conj(const C& v) { return std::conj(v); }
    static double abs(const C& v) { return std::abs(v); }
    static std::string str(const C& v);
    // Numeric-confidence integrality decision at the pinned tolerance.
    static bool integer_value(const C& v, long& out) {
        double r = std::round(v.real());
        if (std::abs(v.imag()) > tol::integer * std::max(1.0, std::abs(v.real()))) return false;
        if (std::abs(v.real() - r) > tol::integer * std::max(1.0, std::abs(v.real()))) return false;
        out = static_cast<long>(r);
        return true;
    }
};

std::string format_double(double v);

inline std::string ScalarTraits<std::complex<double>>::str(const C& v) {
    std::string s = format_double(v.real());
    if (v.imag() != 0.0) {
        s += (v.imag() > 0 ? "+" : "-");
        s += format_double(std::abs(v.imag())) + "i";
    }
    return s;
}

}  // namespace polytoep
