#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "polytoep/errors.hpp"

namespace polytoep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

// Accepts integers ("-3"), fractions ("5/4"), decimals ("1.25", ".5"), and
// scientific notation ("25e-2"); every form is converted without rounding.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

// Complex numbers with rational real and imaginary parts: a field, so every
// exact computation downstream (division included) stays closed.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
    explicit GaussRational(long v) : re(v), im(0) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    GaussRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }
    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    GaussRational operator-() const { return {-re, -im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        Rational n2 = b.norm2();
        if (n2.is_zero()) throw ValidationError("division by zero");
        return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
    }
    GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
    GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
    GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
    GaussRational& operator/=(const GaussRational& o) { return *this = *this / o; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

std::string to_string(const GaussRational& z);

// Nearest small-denominator rational via continued fractions; used to promote
// a floating root to an exact one (the promotion is always verified exactly).
Rational rational_reconstruct(double x, long max_den);

inline Rational parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw ParseError("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw ParseError("bad fraction: " + text);
        try {
            BigInt n(num), d(den);
            return Rational(n, d);
        } catch (const std::exception&) {
            throw ParseError("bad fraction: " + text);
        }
    }

    bool neg = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
    std::string digits;
    long scale10 = 0;  // value = digits * 10^scale10
    bool seen_point = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (seen_point) --scale10;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (c == 'e' || c == 'E') {
            try {
                scale10 += std::stol(s.substr(i + 1));
            } catch (const std::exception&) {
                throw ParseError("bad exponent: " + text);
            }
            break;
        } else {
            throw ParseError("bad rational literal: " + text);
        }
    }
    if (!seen_digit) throw ParseError("bad rational literal: " + text);

    BigInt mant(digits.empty() ? "0" : digits);
    if (neg) mant = -mant;
    Rational r(mant);
    BigInt pow10 = 1;
    for (long k = 0; k < (scale10 < 0 ? -scale10 : scale10); ++k) pow10 *= 10;
    if (scale10 < 0)
        r /= Rational(pow10);
    else
        r *= Rational(pow10);
    return r;
}

inline std::string to_string(const Rational& r) {
    std::string s = boost::multiprecision::numerator(r).str();
    if (boost::multiprecision::denominator(r) != 1)
        s += "/" + boost::multiprecision::denominator(r).str();
    return s;
}

inline std::string to_string(const GaussRational& z) {
    if (z.im.is_zero()) return to_string(z.re);
    std::string s = to_string(z.re);
    s += (z.im > 0 ? "+" : "-");
    Rational a = z.im > 0 ? z.im : Rational(-z.im);
    s += to_string(a) + "i";
    return s;
}

inline Rational rational_reconstruct(double x, long max_den) {
    if (!(max_den >= 1)) throw ValidationError("max_den must be >= 1");
    bool neg = x < 0;
    double v = neg ? -x : x;
    // Continued-fraction convergents p/q of v until the denominator cap.
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int step = 0; step < 64; ++step) {
        double fl = std::floor(frac);
        if (fl > 9e17) break;
        BigInt a(static_cast<long long>(fl));
        BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return Rational(0);
    Rational r(p1, q1);
    return neg ? Rational(-r) : r;
}

}  // namespace polytoep
