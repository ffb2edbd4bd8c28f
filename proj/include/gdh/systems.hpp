#pragma once

// gDH and general 3-dimensional homogeneous quadratic systems, the attached
// commutative non-associative algebra (idempotents, nilpotents, rays),
// Kovalevskaya exponents, and Darboux-polynomial checks.

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "gdh/jet.hpp"
#include "gdh/mpoly.hpp"
#include "gdh/numbers.hpp"

namespace gdh {

using Vec3 = std::array<cplx, 3>;
using Mat3 = std::array<std::array<cplx, 3>, 3>;

inline double norm_inf(const Vec3& v) {
    return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}
inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 operator*(cplx s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline Vec3 mat_vec(const Mat3& m, const Vec3& v) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += m[i][j] * v[j];
    return r;
}
inline Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}
inline cplx det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}
inline Mat3 mat_inverse(const Mat3& m) {
    cplx d = det3(m);
    if (std::abs(d) == 0.0) throw SingularMatrix("3x3 inverse of singular matrix");
    Mat3 r;
    r[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
    r[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
    r[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
    r[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
    r[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
    r[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
    r[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
    r[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
    r[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
    return r;
}

// gDH(a1,a2,a3;b1,b2,b3;c)
struct GdhParams {
    cplx a1{}, a2{}, a3{}, b1{}, b2{}, b3{}, c{};

    std::array<cplx, 3> a() const { return {a1, a2, a3}; }
    std::array<cplx, 3> b() const { return {b1, b2, b3}; }
    cplx sum_a() const { return a1 + a2 + a3; }
    cplx sum_b() const { return b1 + b2 + b3; }

    friend bool operator==(const GdhParams&, const GdhParams&) = default;
};

inline GdhParams make_gdh(cplx a1, cplx a2, cplx a3, cplx b1, cplx b2, cplx b3, cplx c) {
    return GdhParams{a1, a2, a3, b1, b2, b3, c};
}

template <class V>
inline std::array<V, 3> gdh_rhs_generic(const GdhParams& p, const std::array<V, 3>& x) {
    const V& x1 = x[0];
    const V& x2 = x[1];
    const V& x3 = x[2];
    V a1(p.a1), a2(p.a2), a3(p.a3), b1(p.b1), b2(p.b2), b3(p.b3), c(p.c);
    V bsum = b1 * (x2 * x3) + b2 * (x3 * x1) + b3 * (x1 * x2);
    return {
        -a1 * ((x1 - x2) * (x3 - x1)) + bsum - c * (x2 * x3),
        -a2 * ((x2 - x3) * (x1 - x2)) + bsum - c * (x3 * x1),
        -a3 * ((x3 - x1) * (x2 - x3)) + bsum - c * (x1 * x2),
    };
}

inline Vec3 eval_gdh_rhs(const GdhParams& p, const Vec3& x) {
    return gdh_rhs_generic<cplx>(p, x);
}

// commutative product of the attached algebra, x*y := [Q(x+y)-Q(x)-Q(y)]/2
inline Vec3 algebra_product(const GdhParams& p, const Vec3& x, const Vec3& y) {
    Vec3 s = eval_gdh_rhs(p, x + y);
    Vec3 qx = eval_gdh_rhs(p, x);
    Vec3 qy = eval_gdh_rhs(p, y);
    return 0.5 * (s - qx - qy);
}

// Jacobian of the gDH right-hand side
inline Mat3 gdh_rhs_jacobian(const GdhParams& p, const Vec3& x) {
    cplx x1 = x[0], x2 = x[1], x3 = x[2];
    Mat3 j;
    j[0][0] = -p.a1 * (x2 + x3 - 2.0 * x1) + p.b2 * x3 + p.b3 * x2;
    j[0][1] = p.a1 * (x3 - x1) + p.b1 * x3 + p.b3 * x1 - p.c * x3;
    j[0][2] = -p.a1 * (x1 - x2) + p.b1 * x2 + p.b2 * x1 - p.c * x2;
    j[1][1] = -p.a2 * (x3 + x1 - 2.0 * x2) + p.b3 * x1 + p.b1 * x3;
    j[1][2] = p.a2 * (x1 - x2) + p.b2 * x1 + p.b1 * x2 - p.c * x1;
    j[1][0] = -p.a2 * (x2 - x3) + p.b2 * x3 + p.b3 * x2 - p.c * x3;
    j[2][2] = -p.a3 * (x1 + x2 - 2.0 * x3) + p.b1 * x2 + p.b2 * x1;
    j[2][0] = p.a3 * (x2 - x3) + p.b3 * x2 + p.b2 * x3 - p.c * x2;
    j[2][1] = -p.a3 * (x3 - x1) + p.b1 * x3 + p.b3 * x1 - p.c * x1;
    return j;
}

// full 18-parameter HQDS
struct HqdsParams {
    Mat3 a{};  // coefficients of x_j^2
    Mat3 b{};  // coefficients of x2x3, x3x1, x1x2
};

template <class V>
inline std::array<V, 3> hqds_rhs_generic(const HqdsParams& h, const std::array<V, 3>& x) {
    std::array<V, 3> cross = {x[1] * x[2], x[2] * x[0], x[0] * x[1]};
    std::array<V, 3> r{};
    for (int i = 0; i < 3; ++i) {
        V acc(0);
        for (int j = 0; j < 3; ++j)
            acc = acc + V(h.a[i][j]) * (x[j] * x[j]) + V(h.b[i][j]) * cross[j];
        r[i] = acc;
    }
    return r;
}

inline Vec3 eval_hqds_rhs(const HqdsParams& h, const Vec3& x) {
    return hqds_rhs_generic<cplx>(h, x);
}

// a_ij = a_i delta_ij, b_ij = (2 a_i - c) delta_ij - a_i + b_j
inline HqdsParams hqds_from_gdh(const GdhParams& p) {
    HqdsParams h;
    std::array<cplx, 3> a = p.a();
    std::array<cplx, 3> b = p.b();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            h.a[i][j] = (i == j) ? a[i] : cplx(0);
            h.b[i][j] = ((i == j) ? (2.0 * a[i] - p.c) : cplx(0)) - a[i] + b[j];
        }
    return h;
}

enum class ElementKind { idempotent, nilpotent, generic };

struct AlgebraElement {
    Vec3 coords{};      // scaled so that p*p = p for idempotents
    Vec3 direction{};   // the canonical direction before rescaling
    ElementKind kind{ElementKind::generic};
    std::string name;   // e0, e1, e2, e3, e1', e2', e3'
    bool degenerate{false};
};

// The seven canonical directions e0; e1,e2,e3; e1',e2',e3' with
// ei' = (c-ai-bi) ei + (-c-ai+bj+bk)(ej+ek).
inline std::vector<AlgebraElement> find_idempotents_nilpotents(const GdhParams& p,
                                                               double tol = 1e-10) {
    std::vector<AlgebraElement> out;
    auto classify = [&](Vec3 e, std::string name) {
        AlgebraElement el;
        el.direction = e;
        el.name = std::move(name);
        double scale = norm_inf(e);
        if (scale == 0.0) {
            el.kind = ElementKind::generic;
            el.degenerate = true;
            out.push_back(el);
            return;
        }
        Vec3 w = algebra_product(p, e, e);
        // least-squares multiplier of w along e
        cplx dot{}, nrm{};
        for (int i = 0; i < 3; ++i) {
            dot += w[i] * std::conj(e[i]);
            nrm += e[i] * std::conj(e[i]);
        }
        cplx lambda = dot / nrm;
        double dev = norm_inf(w - lambda * e);
        if (dev > tol * scale * scale) {
            el.kind = ElementKind::generic;
            el.degenerate = true;
            out.push_back(el);
            return;
        }
        if (norm_inf(w) <= tol * scale * scale) {
            el.kind = ElementKind::nilpotent;
            el.coords = e;
        } else {
            el.kind = ElementKind::idempotent;
            el.coords = (1.0 / lambda) * e;  // p*p = p
        }
        out.push_back(el);
    };

    classify(Vec3{1, 1, 1}, "e0");
    std::array<cplx, 3> a = p.a();
    std::array<cplx, 3> b = p.b();
    const char* en[3] = {"e1", "e2", "e3"};
    const char* epn[3] = {"e1'", "e2'", "e3'"};
    for (int i = 0; i < 3; ++i) {
        Vec3 ei{};
        ei[i] = 1.0;
        classify(ei, en[i]);
    }
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        Vec3 e{};
        e[i] = p.c - a[i] - b[i];
        e[j] = -p.c - a[i] + b[j] + b[k];
        e[k] = e[j];
        classify(e, epn[i]);
    }
    return out;
}

// roots of z^3 + a2 z^2 + a1 z + a0 (Cardano, with cluster refinement so
// that exact double and triple roots come out to full precision)
inline std::array<cplx, 3> cubic_roots(cplx a2, cplx a1, cplx a0) {
    cplx p = a1 - a2 * a2 / 3.0;
    cplx q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
    cplx disc = q * q / 4.0 + p * p * p / 27.0;
    cplx sq = std::sqrt(disc);
    cplx u3 = -q / 2.0 + sq;
    if (std::abs(u3) < 1e-300) u3 = -q / 2.0 - sq;
    cplx u = std::pow(u3, 1.0 / 3.0);
    std::array<cplx, 3> roots;
    const cplx w(-0.5, std::sqrt(3.0) / 2.0);
    for (int k = 0; k < 3; ++k) {
        cplx uk = u * std::pow(w, static_cast<double>(k));
        cplx y = (std::abs(uk) < 1e-300) ? cplx(0) : uk - p / (3.0 * uk);
        roots[k] = y - a2 / 3.0;
    }
    auto poly = [&](cplx z) { return ((z + a2) * z + a1) * z + a0; };
    auto dpoly = [&](cplx z) { return (3.0 * z + 2.0 * a2) * z + a1; };
    double scale = 1.0 + std::abs(roots[0]) + std::abs(roots[1]) + std::abs(roots[2]);
    // Newton polish for simple roots
    for (auto& r : roots) {
        cplx d = dpoly(r);
        if (std::abs(d) > 1e-6 * scale * scale) r -= poly(r) / d;
    }
    // a cluster of two sits at a root of the derivative; of three at -a2/3
    bool c01 = std::abs(roots[0] - roots[1]) < 1e-5 * scale;
    bool c12 = std::abs(roots[1] - roots[2]) < 1e-5 * scale;
    bool c02 = std::abs(roots[0] - roots[2]) < 1e-5 * scale;
    if (c01 && c12 && c02) {
        roots[0] = roots[1] = roots[2] = -a2 / 3.0;
    } else {
        auto refine_pair = [&](int i, int j) {
            cplx mid = (roots[i] + roots[j]) / 2.0;
            cplx s = std::sqrt(a2 * a2 - 3.0 * a1);
            cplx r1 = (-a2 + s) / 3.0, r2 = (-a2 - s) / 3.0;
            cplx best = std::abs(r1 - mid) < std::abs(r2 - mid) ? r1 : r2;
            roots[i] = roots[j] = best;
        };
        if (c01) refine_pair(0, 1);
        else if (c12) refine_pair(1, 2);
        else if (c02) refine_pair(0, 2);
    }
    return roots;
}

inline void sort_canonical(std::array<cplx, 3>& v) {
    std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

// eigenvalues of I - DQ at an idempotent, canonically sorted
inline std::array<cplx, 3> kovalevskaya_exponents(const GdhParams& p,
                                                  const AlgebraElement& e) {
    if (e.kind != ElementKind::idempotent)
        throw NilpotentDirection("Kovalevskaya exponents need an idempotent");
    Mat3 dq = gdh_rhs_jacobian(p, e.coords);
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = (i == j ? cplx(1) : cplx(0)) - dq[i][j];
    // characteristic polynomial z^3 - tr z^2 + m2 z - det
    cplx tr = m[0][0] + m[1][1] + m[2][2];
    cplx m2 = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] -
              m[0][2] * m[2][0] + m[1][1] * m[2][2] - m[1][2] * m[2][1];
    cplx det = det3(m);
    auto roots = cubic_roots(-tr, m2, -det);
    sort_canonical(roots);
    return roots;
}

// gDH right-hand side with exact coefficients, for Darboux checks
inline std::array<MPoly, 3> gdh_rhs_exact(const GdhParams& p,
                                          const std::vector<std::string>& vars,
                                          double tol = 1e-9) {
    std::array<ExtRational, 7> e;
    std::array<cplx, 7> v{p.a1, p.a2, p.a3, p.b1, p.b2, p.b3, p.c};
    for (int i = 0; i < 7; ++i)
        if (!rationalize_ext(v[i], e[i], tol))
            throw Error("gdh_rhs_exact: parameters not in Q(w)");
    auto X = [&](int i) { return MPoly::variable(vars, vars[i]); };
    std::array<MPoly, 3> q;
    MPoly bsum = MPoly::constant(vars, e[3]) * X(1) * X(2) +
                 MPoly::constant(vars, e[4]) * X(2) * X(0) +
                 MPoly::constant(vars, e[5]) * X(0) * X(1);
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        q[i] = -(ExtRational(1) * MPoly::constant(vars, e[i])) * (X(i) - X(j)) * (X(k) - X(i)) +
               bsum - MPoly::constant(vars, e[6]) * X(j) * X(k);
    }
    return q;
}

// If pdot = lambda * p exactly (lambda of degree 1), return lambda;
// an empty result reports that the polynomial is not Darboux.
inline std::optional<MPoly> darboux_eigenvalue(const GdhParams& params, const MPoly& poly) {
    if (!poly.is_homogeneous()) throw NonHomogeneous("Darboux check needs homogeneous input");
    const auto& vars = poly.vars();
    if (vars.size() != 3) throw VariableMismatch("Darboux check needs 3 variables");
    auto q = gdh_rhs_exact(params, vars);
    MPoly pdot = MPoly::constant(vars, ExtRational(0));
    for (int i = 0; i < 3; ++i) pdot = pdot + q[i] * poly.partial(vars[i]);
    if (pdot.is_zero()) return MPoly::constant(vars, ExtRational(0));
    auto lam = pdot.divide_exact(poly);
    if (!lam || (lam->degree() && *lam->degree() > 1)) return std::nullopt;
    return lam;
}

} // namespace gdh
