#pragma once

// Degree-3 Taylor jets (value and first three derivatives) in complex
// arithmetic; enough for Schwarzian and Chazy residuals of closed forms.

#include <array>
#include <cmath>
#include <complex>

#include "gdh/numbers.hpp"

namespace gdh {

struct Jet {
    // f, f', f'', f'''
    std::array<cplx, 4> d{};

    Jet() = default;
    Jet(cplx value) { d[0] = value; }
    Jet(cplx f0, cplx f1, cplx f2 = 0.0, cplx f3 = 0.0) : d{f0, f1, f2, f3} {}

    static Jet var(cplx t) { return Jet(t, 1.0); }

    cplx value() const { return d[0]; }

    friend Jet operator+(const Jet& a, const Jet& b) {
        Jet r;
        for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] + b.d[i];
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        Jet r;
        for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] - b.d[i];
        return r;
    }
    friend Jet operator-(const Jet& a) {
        Jet r;
        for (int i = 0; i < 4; ++i) r.d[i] = -a.d[i];
        return r;
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        // Leibniz through third order
        Jet r;
        r.d[0] = a.d[0] * b.d[0];
        r.d[1] = a.d[1] * b.d[0] + a.d[0] * b.d[1];
        r.d[2] = a.d[2] * b.d[0] + 2.0 * a.d[1] * b.d[1] + a.d[0] * b.d[2];
        r.d[3] = a.d[3] * b.d[0] + 3.0 * a.d[2] * b.d[1] + 3.0 * a.d[1] * b.d[2] +
                 a.d[0] * b.d[3];
        return r;
    }
    friend Jet operator*(cplx s, const Jet& a) { return Jet(s) * a; }
    friend Jet operator/(const Jet& a, const Jet& b) {
        // q = a/b solved from a = q*b order by order
        Jet q;
        q.d[0] = a.d[0] / b.d[0];
        q.d[1] = (a.d[1] - q.d[0] * b.d[1]) / b.d[0];
        q.d[2] = (a.d[2] - q.d[0] * b.d[2] - 2.0 * q.d[1] * b.d[1]) / b.d[0];
        q.d[3] = (a.d[3] - q.d[0] * b.d[3] - 3.0 * q.d[1] * b.d[2] -
                  3.0 * q.d[2] * b.d[1]) / b.d[0];
        return q;
    }
    friend Jet operator+(const Jet& a, cplx s) { return a + Jet(s); }
    friend Jet operator+(cplx s, const Jet& a) { return Jet(s) + a; }
    friend Jet operator-(const Jet& a, cplx s) { return a - Jet(s); }
    friend Jet operator-(cplx s, const Jet& a) { return Jet(s) - a; }
};

// jet of the k-th derivative (top entries unknown, zero-filled)
inline Jet jet_shift(const Jet& f, int k) {
    Jet r;
    for (int i = 0; i + k < 4; ++i) r.d[i] = f.d[i + k];
    return r;
}

// chain rule for g(f) given scalar derivatives g, g', g'', g''' at f.value()
inline Jet jet_compose(const std::array<cplx, 4>& g, const Jet& f) {
    Jet r;
    cplx u1 = f.d[1], u2 = f.d[2], u3 = f.d[3];
    r.d[0] = g[0];
    r.d[1] = g[1] * u1;
    r.d[2] = g[2] * u1 * u1 + g[1] * u2;
    r.d[3] = g[3] * u1 * u1 * u1 + 3.0 * g[2] * u1 * u2 + g[1] * u3;
    return r;
}

inline Jet jet_exp(const Jet& f) {
    cplx e = std::exp(f.d[0]);
    return jet_compose({e, e, e, e}, f);
}
inline Jet jet_log(const Jet& f) {
    cplx v = f.d[0];
    return jet_compose({std::log(v), 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v)}, f);
}
inline Jet jet_sin(const Jet& f) {
    cplx s = std::sin(f.d[0]), c = std::cos(f.d[0]);
    return jet_compose({s, c, -s, -c}, f);
}
inline Jet jet_cos(const Jet& f) {
    cplx s = std::sin(f.d[0]), c = std::cos(f.d[0]);
    return jet_compose({c, -s, -c, s}, f);
}
inline Jet jet_pow(const Jet& f, cplx a) {
    cplx v = f.d[0];
    cplx p = std::pow(v, a);
    return jet_compose({p, a * p / v, a * (a - 1.0) * p / (v * v),
                        a * (a - 1.0) * (a - 2.0) * p / (v * v * v)}, f);
}
inline Jet jet_ipow(const Jet& f, int n) {
    if (n == 0) return Jet(1.0);
    Jet r = f;
    bool invert = n < 0;
    int m = invert ? -n : n;
    for (int i = 1; i < m; ++i) r = r * f;
    if (invert) r = Jet(1.0) / r;
    return r;
}

} // namespace gdh
