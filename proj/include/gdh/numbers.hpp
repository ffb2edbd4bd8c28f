#pragma once

// Exact coefficient arithmetic: rationals and the quadratic extension Q(w),
// w a primitive cube root of unity (w^2 = -1 - w).

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

#include "gdh/errors.hpp"

namespace gdh {

using Rational = boost::multiprecision::cpp_rational;
using cplx = std::complex<double>;

inline double to_double(const Rational& r) { return static_cast<double>(r); }

// value = re + om*w.  Closed under +,-,*,/ since w^2 = -1-w.
struct ExtRational {
    Rational re{0};
    Rational om{0};

    ExtRational() = default;
    ExtRational(long n) : re(n) {}
    ExtRational(const Rational& r) : re(r) {}
    ExtRational(Rational r, Rational o) : re(std::move(r)), om(std::move(o)) {}
    static ExtRational omega() { return ExtRational{Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && om == 0; }
    bool is_rational() const { return om == 0; }

    friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
        return {a.re + b.re, a.om + b.om};
    }
    friend ExtRational operator-(const ExtRational& a, const ExtRational& b) {
        return {a.re - b.re, a.om - b.om};
    }
    friend ExtRational operator-(const ExtRational& a) { return {-a.re, -a.om}; }
    friend ExtRational operator*(const ExtRational& a, const ExtRational& b) {
        // (a1 + a2 w)(b1 + b2 w) = a1 b1 - a2 b2 + (a1 b2 + a2 b1 - a2 b2) w
        return {a.re * b.re - a.om * b.om,
                a.re * b.om + a.om * b.re - a.om * b.om};
    }
    ExtRational inv() const {
        // solve (re + om w)(x + y w) = 1; determinant re^2 - re*om + om^2 > 0
        Rational det = re * re - re * om + om * om;
        if (det == 0) throw Error("ExtRational: division by zero");
        return {(re - om) / det, -om / det};
    }
    friend ExtRational operator/(const ExtRational& a, const ExtRational& b) {
        return a * b.inv();
    }
    ExtRational& operator+=(const ExtRational& b) { *this = *this + b; return *this; }
    ExtRational& operator-=(const ExtRational& b) { *this = *this - b; return *this; }
    ExtRational& operator*=(const ExtRational& b) { *this = *this * b; return *this; }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        return a.re == b.re && a.om == b.om;
    }
    friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }

    template <class C = cplx>
    C to_complex() const {
        using R = typename C::value_type;
        // w = -1/2 + i*sqrt(3)/2
        const R s3 = std::sqrt(R(3));
        R o = static_cast<R>(to_double(om));
        return C(static_cast<R>(to_double(re)) - o / 2, o * s3 / 2);
    }

    // "p/q" or "p/q+r/s*w"
    std::string str() const {
        auto rat = [](const Rational& r) {
            std::string s = numerator(r).str();
            if (denominator(r) != 1) s += "/" + denominator(r).str();
            return s;
        };
        if (om == 0) return rat(re);
        std::string s = rat(re);
        s += (om > 0 ? "+" : "-");
        Rational a = om > 0 ? om : Rational(-om);
        s += rat(a) + "*w";
        return s;
    }
};

inline ExtRational frac(long p, long q) { return ExtRational(Rational(p) / q); }

// Nearest rational with small denominator (continued fractions).  Used to
// lift floating point parameters into exact arithmetic where required.
inline bool rationalize(double x, Rational& out, double tol = 1e-9,
                        long max_den = 1000000L) {
    if (!std::isfinite(x)) return false;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        if (fl > 9e17 || fl < -9e17) return false;
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(approx - x) <= tol * std::max(1.0, std::abs(x))) {
            out = Rational(p1) / q1;
            return true;
        }
        double rem = v - fl;
        if (rem < 1e-15) break;
        v = 1.0 / rem;
    }
    double approx = q1 ? static_cast<double>(p1) / static_cast<double>(q1) : 0.0;
    if (q1 && std::abs(approx - x) <= tol * std::max(1.0, std::abs(x))) {
        out = Rational(p1) / q1;
        return true;
    }
    return false;
}

// Lift a complex number lying in Q(w) (so Im z must be a rational multiple of
// sqrt(3)/2) into exact form.
inline bool rationalize_ext(cplx z, ExtRational& out, double tol = 1e-9) {
    Rational om;
    double oref = z.imag() / (std::sqrt(3.0) / 2.0);
    if (!rationalize(oref, om, tol)) return false;
    Rational re;
    if (!rationalize(z.real() + to_double(om) / 2.0, re, tol)) return false;
    out = ExtRational{re, om};
    return true;
}

} // namespace gdh
