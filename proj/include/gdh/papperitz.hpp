#pragma once

// P-symbol calculus: the Papperitz equation and its normal forms, 2F1
// evaluation with continuation, Frobenius local solutions, the Delta_i
// exponent-shift factors, and the Weierstrass elliptic function.

#include <array>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "gdh/numerics.hpp"

namespace gdh {

// point on the Riemann sphere
struct ExtC {
    cplx v{};
    bool inf{false};

    ExtC() = default;
    ExtC(cplx z) : v(z) {}
    static ExtC infinity() {
        ExtC e;
        e.inf = true;
        return e;
    }
    bool operator==(const ExtC& o) const {
        if (inf || o.inf) return inf && o.inf;
        return v == o.v;
    }
};

struct PSymbol {
    std::array<ExtC, 3> points;
    std::array<std::pair<cplx, cplx>, 3> mu;  // exponent pairs (mu_i, mu_i')

    cplx fuchs_defect() const {
        cplx s = 0;
        for (const auto& [m, mp] : mu) s += m + mp;
        return s - 1.0;
    }
    void validate(double tol = 1e-12) const {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (points[i] == points[j])
                    throw CoincidentPoints("P-symbol points must be distinct");
        if (std::abs(fuchs_defect()) > tol)
            throw FuchsViolation("Fuchs relation sum(mu_i + mu_i') = 1 violated");
    }
    int infinite_index() const {  // -1 if all points finite
        for (int i = 0; i < 3; ++i)
            if (points[i].inf) return i;
        return -1;
    }
    cplx mu_sum() const { return mu[0].first + mu[1].first + mu[2].first; }
};

// GHE P-symbol for exponent differences (alpha1, alpha2, alpha3)
inline PSymbol ghe_psymbol(cplx a1, cplx a2, cplx a3) {
    PSymbol s;
    s.points = {ExtC(cplx(0)), ExtC(cplx(1)), ExtC::infinity()};
    s.mu[0] = {0.0, a1};
    s.mu[1] = {0.0, a2};
    s.mu[2] = {(1.0 - a1 - a2 - a3) / 2.0, (1.0 - a1 - a2 + a3) / 2.0};
    return s;
}

// self-adjoint normal form (null first-order coefficient)
inline PSymbol sahe_psymbol(cplx a1, cplx a2, cplx a3) {
    PSymbol s;
    s.points = {ExtC(cplx(0)), ExtC(cplx(1)), ExtC::infinity()};
    s.mu[0] = {(1.0 - a1) / 2.0, (1.0 + a1) / 2.0};
    s.mu[1] = {(1.0 - a2) / 2.0, (1.0 + a2) / 2.0};
    s.mu[2] = {(-1.0 - a3) / 2.0, (-1.0 + a3) / 2.0};
    return s;
}

// third normal form (P2 with double poles only); mu1 mu1' = mu2 mu2'
inline PSymbol third_psymbol(cplx a1, cplx a2, cplx a3) {
    PSymbol s;
    s.points = {ExtC(cplx(0)), ExtC(cplx(1)), ExtC::infinity()};
    cplx d = 4.0 * (1.0 - a3);
    s.mu[0] = {((1.0 - a1 - a3) * (1.0 - a1 - a3) - a2 * a2) / d,
               ((1.0 + a1 - a3) * (1.0 + a1 - a3) - a2 * a2) / d};
    s.mu[1] = {((1.0 - a2 - a3) * (1.0 - a2 - a3) - a1 * a1) / d,
               ((1.0 + a2 - a3) * (1.0 + a2 - a3) - a1 * a1) / d};
    s.mu[2] = {0.0, a3};
    return s;
}

// coefficient functions of f'' + P1 f' + P2 f = 0, with limits when one
// singular point is infinite
struct PeCoeffs {
    PSymbol sym;

    cplx P1(cplx t) const {
        cplx acc = 0;
        for (int i = 0; i < 3; ++i) {
            if (sym.points[i].inf) continue;
            acc += (1.0 - sym.mu[i].first - sym.mu[i].second) / (t - sym.points[i].v);
        }
        return acc;
    }
    cplx P2(cplx t) const {
        int inf = sym.infinite_index();
        cplx acc = 0;
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            cplx mm = sym.mu[i].first * sym.mu[i].second;
            if (i == inf) {
                acc += mm / ((t - sym.points[j].v) * (t - sym.points[k].v));
            } else if (j == inf) {
                cplx ti = sym.points[i].v, tk = sym.points[k].v;
                acc += mm * (ti - tk) / ((t - ti) * (t - ti) * (t - tk));
            } else if (k == inf) {
                cplx ti = sym.points[i].v, tj = sym.points[j].v;
                acc += mm * (ti - tj) / ((t - ti) * (t - ti) * (t - tj));
            } else {
                cplx ti = sym.points[i].v, tj = sym.points[j].v, tk = sym.points[k].v;
                acc += mm * (ti - tj) * (ti - tk) /
                       ((t - ti) * (t - ti) * (t - tj) * (t - tk));
            }
        }
        return acc;
    }
};

inline PeCoeffs pe_coefficients(const PSymbol& s) {
    s.validate();
    return PeCoeffs{s};
}

// --- Gauss hypergeometric function -------------------------------------------

namespace detail {

inline bool near_nonpositive_integer(cplx c, double tol = 1e-12) {
    double r = std::round(c.real());
    return r <= 0.0 && std::abs(c - cplx(r, 0)) < tol;
}

// direct series for |t| < 1
inline cplx hyp_series_value(cplx a, cplx b, cplx c, cplx t) {
    cplx term = 1.0, sum = 1.0;
    for (int n = 0; n < 6000; ++n) {
        cplx dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * t;
        sum += term;
        if (n > 4 && std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
    }
    return sum;
}

inline std::pair<cplx, cplx> hyp_series(cplx a, cplx b, cplx c, cplx t) {
    cplx f = hyp_series_value(a, b, c, t);
    cplx df = (a * b / c) * hyp_series_value(a + 1.0, b + 1.0, c + 1.0, t);
    return {f, df};
}

inline double dist_segment_point(cplx a, cplx b, cplx p) {
    cplx d = b - a;
    double len2 = std::norm(d);
    if (len2 == 0) return std::abs(p - a);
    double s = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + s * d));
}

} // namespace detail

// value and derivative of 2F1; power series for |t| <= 0.75, otherwise
// continuation of the GHE along the straight segment from a seed point
inline std::pair<cplx, cplx> hyp2f1_jet(cplx a, cplx b, cplx c, cplx t) {
    if (detail::near_nonpositive_integer(c))
        throw PoleOfC("2F1 undefined: c is a nonpositive integer");
    if (std::abs(t) <= 0.75) return detail::hyp_series(a, b, c, t);
    cplx seed = 0.5 * t / std::abs(t);
    if (detail::dist_segment_point(seed, t, 1.0) < 0.05 ||
        detail::dist_segment_point(seed, t, 0.0) < 0.05)
        throw ContinuationThroughSingularity("2F1 continuation path near singular point");
    auto [f0, df0] = detail::hyp_series(a, b, c, seed);
    // the GHE with these 2F1 parameters has exponent differences
    // (1-c, c-a-b, b-a)
    PSymbol s = ghe_psymbol(1.0 - c, c - a - b, b - a);
    PeCoeffs pe{s};
    detail::State<2> y{f0, df0};
    IntegratorConfig cfg;
    cfg.rel_tol = cfg.abs_tol = 1e-13;
    integrate_ode<2>(
        [&](cplx tt, const detail::State<2>& yy) -> detail::State<2> {
            return {yy[1], -pe.P1(tt) * yy[1] - pe.P2(tt) * yy[0]};
        },
        y, {seed, t}, cfg);
    return {y[0], y[1]};
}

inline cplx hyp2f1(cplx a, cplx b, cplx c, cplx t) { return hyp2f1_jet(a, b, c, t).first; }

// --- Frobenius local solutions ------------------------------------------------

namespace detail {

using Series = std::vector<cplx>;  // truncated power series, constant first

inline Series series_add(const Series& a, const Series& b) {
    Series r(std::max(a.size(), b.size()), 0.0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}
inline Series series_mul(const Series& a, const Series& b, size_t n) {
    Series r(n, 0.0);
    for (size_t i = 0; i < a.size() && i < n; ++i)
        for (size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
    return r;
}
inline Series series_scale(cplx s, Series a) {
    for (auto& z : a) z *= s;
    return a;
}
// 1/(t - tj) around t0:  -sum_k dz^k / (tj - t0)^{k+1}
inline Series geom_pole(cplx t0, cplx tj, size_t n) {
    Series r(n);
    cplx inv = 1.0 / (tj - t0);
    cplx acc = -inv;
    for (size_t k = 0; k < n; ++k) {
        r[k] = acc;
        acc *= inv;
    }
    return r;
}
// 1/(1 - tj w) around w = 0
inline Series geom_inf(cplx tj, size_t n) {
    Series r(n);
    cplx acc = 1.0;
    for (size_t k = 0; k < n; ++k) {
        r[k] = acc;
        acc *= tj;
    }
    return r;
}

// Taylor data of p(z) = z P1 and q(z) = z^2 P2 in the local coordinate at a
// regular singular point (the w = 1/t chart when the point is infinite).
inline std::pair<Series, Series> frobenius_pq(const PSymbol& s, int at, size_t n) {
    const int i = at;
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    auto musum = [&](int l) { return s.mu[l].first + s.mu[l].second; };
    auto muprod = [&](int l) { return s.mu[l].first * s.mu[l].second; };
    Series p(n, 0.0), q(n, 0.0);
    if (!s.points[i].inf) {
        cplx t0 = s.points[i].v;
        p[0] = 1.0 - musum(i);
        for (int l : {j, k}) {
            if (s.points[l].inf) continue;
            Series g = geom_pole(t0, s.points[l].v, n);
            for (size_t m = 1; m < n; ++m) p[m] += (1.0 - musum(l)) * g[m - 1];
        }
        int infidx = s.infinite_index();
        if (infidx == -1) {
            cplx tj = s.points[j].v, tk = s.points[k].v;
            Series gj = geom_pole(t0, tj, n), gk = geom_pole(t0, tk, n);
            // z^2 P2 = mm_i (t0-tj)(t0-tk) Gj Gk
            //        + mm_j (tj-t0)(tj-tk) z Gj^2 Gk
            //        + mm_k (tk-t0)(tk-tj) z Gk^2 Gj
            Series qi = series_scale(muprod(i) * (t0 - tj) * (t0 - tk),
                                     series_mul(gj, gk, n));
            Series gj2k = series_mul(series_mul(gj, gj, n), gk, n);
            Series gk2j = series_mul(series_mul(gk, gk, n), gj, n);
            Series qj(n, 0.0), qk(n, 0.0);
            for (size_t m = 1; m < n; ++m) {
                qj[m] = muprod(j) * (tj - t0) * (tj - tk) * gj2k[m - 1];
                qk[m] = muprod(k) * (tk - t0) * (tk - tj) * gk2j[m - 1];
            }
            q = series_add(series_add(qi, qj), qk);
        } else {
            int fin = (infidx == j) ? k : j;
            cplx tf = s.points[fin].v;
            Series gf = geom_pole(t0, tf, n);
            // z^2 P2 = mm_i (t0-tf) Gf + mm_fin (tf-t0) z Gf^2 + mm_inf z Gf
            Series qi = series_scale(muprod(i) * (t0 - tf), gf);
            Series gf2 = series_mul(gf, gf, n);
            Series qf(n, 0.0), qinf(n, 0.0);
            for (size_t m = 1; m < n; ++m) {
                qf[m] = muprod(fin) * (tf - t0) * gf2[m - 1];
                qinf[m] = muprod(infidx) * gf[m - 1];
            }
            q = series_add(series_add(qi, qf), qinf);
        }
    } else {
        // w = 1/t: f_ww + (p(w)/w) f_w + (q(w)/w^2) f = 0 with
        // p(w) = 2 - sum_l (1 - mu_l - mu_l') H_l,
        // q(w) = mm_j (tj-tk) w Hj^2 Hk + mm_k (tk-tj) w Hk^2 Hj + mm_i Hj Hk,
        // H_l = 1/(1 - t_l w)
        cplx tj = s.points[j].v, tk = s.points[k].v;
        Series hj = geom_inf(tj, n), hk = geom_inf(tk, n);
        p[0] = 2.0;
        for (size_t m = 0; m < n; ++m)
            p[m] -= (1.0 - musum(j)) * hj[m] + (1.0 - musum(k)) * hk[m];
        Series hj2k = series_mul(series_mul(hj, hj, n), hk, n);
        Series hk2j = series_mul(series_mul(hk, hk, n), hj, n);
        Series hjk = series_mul(hj, hk, n);
        for (size_t m = 1; m < n; ++m)
            q[m] = muprod(j) * (tj - tk) * hj2k[m - 1] +
                   muprod(k) * (tk - tj) * hk2j[m - 1];
        for (size_t m = 0; m < n; ++m) q[m] += muprod(i) * hjk[m];
    }
    return {p, q};
}

} // namespace detail

// Frobenius solution with one exponent at a singular point.  The local
// coordinate is (t - t0), or w = 1/t when the point is infinite.
struct LocalSolution {
    PSymbol sym;
    int at{};
    cplx exponent{};
    std::vector<cplx> coeffs;  // c0 = 1; series satisfies the PE recurrence
    double radius{};
    cplx base_point{};
    bool at_infinity{};

    // series value and d/dt inside the disk of convergence
    std::pair<cplx, cplx> eval_series(cplx t) const {
        auto [f, df, ddf] = eval_series2(t);
        return {f, df};
    }

    // value with first and second t-derivatives, all termwise from the series
    std::tuple<cplx, cplx, cplx> eval_series2(cplx t) const {
        cplx z = at_infinity ? 1.0 / t : t - base_point;
        cplx s = 0.0, sd = 0.0, sdd = 0.0, zp = 1.0;
        for (size_t m = 0; m < coeffs.size(); ++m) {
            cplx e = exponent + static_cast<double>(m);
            s += coeffs[m] * zp;
            sd += e * coeffs[m] * zp;
            sdd += e * (e - 1.0) * coeffs[m] * zp;
            zp *= z;
        }
        cplx zmu = std::pow(z, exponent);
        cplx f = zmu * s;
        cplx dfdz = zmu / z * sd;
        cplx ddfdz = zmu / (z * z) * sdd;
        if (!at_infinity) return {f, dfdz, ddfdz};
        // w = 1/t: d/dt = -w^2 d/dw, d^2/dt^2 = w^4 d^2/dw^2 + 2 w^3 d/dw
        return {f, -z * z * dfdz, z * z * z * z * ddfdz + 2.0 * z * z * z * dfdz};
    }

    // continuation along a polyline (default: straight from a seed inside
    // the disk of convergence toward t)
    std::pair<cplx, cplx> eval(cplx t, std::vector<cplx> path = {}) const {
        cplx z = at_infinity ? 1.0 / t : t - base_point;
        if (std::abs(z) < 0.5 * radius && path.empty()) return eval_series(t);
        if (path.empty()) {
            cplx dir = at_infinity ? t / std::abs(t)
                                   : (t - base_point) / std::abs(t - base_point);
            cplx seed = at_infinity ? dir * (2.5 / radius) : base_point + 0.4 * radius * dir;
            path = {seed, t};
        }
        for (size_t sgm = 0; sgm + 1 < path.size(); ++sgm)
            for (int l = 0; l < 3; ++l)
                if (!sym.points[l].inf &&
                    detail::dist_segment_point(path[sgm], path[sgm + 1],
                                               sym.points[l].v) < 1e-8)
                    throw PathThroughSingularity("continuation path hits singular point");
        auto [f0, df0] = eval_series(path.front());
        PeCoeffs pe{sym};
        detail::State<2> y{f0, df0};
        IntegratorConfig cfg;
        cfg.rel_tol = cfg.abs_tol = 1e-13;
        integrate_ode<2>(
            [&](cplx tt, const detail::State<2>& yy) -> detail::State<2> {
                return {yy[1], -pe.P1(tt) * yy[1] - pe.P2(tt) * yy[0]};
            },
            y, path, cfg);
        return {y[0], y[1]};
    }
};

// single Frobenius solution; throws when the upward recurrence is resonant
inline LocalSolution frobenius_solution(const PSymbol& s, int at, bool primed,
                                        size_t nterms = 48) {
    s.validate();
    LocalSolution sol;
    sol.sym = s;
    sol.at = at;
    sol.at_infinity = s.points[at].inf;
    sol.base_point = sol.at_infinity ? cplx(0) : s.points[at].v;
    cplx mu = primed ? s.mu[at].second : s.mu[at].first;
    cplx other = primed ? s.mu[at].first : s.mu[at].second;
    sol.exponent = mu;
    auto [p, q] = detail::frobenius_pq(s, at, nterms);
    auto indicial = [&](cplx x) { return x * (x - 1.0) + p[0] * x + q[0]; };
    std::vector<cplx> c{1.0};
    for (size_t m = 1; m < nterms; ++m) {
        cplx shifted = mu + static_cast<double>(m);
        if (std::abs(other - shifted) < 1e-10)
            throw ResonantExponents("Frobenius recurrence hits a resonant exponent");
        cplx denom = indicial(shifted);
        cplx rhs = 0;
        for (size_t l = 1; l <= m; ++l)
            rhs += c[m - l] * ((mu + static_cast<double>(m - l)) * p[l] + q[l]);
        c.push_back(-rhs / denom);
    }
    sol.coeffs = std::move(c);
    double r = 1e30;
    for (int l = 0; l < 3; ++l) {
        if (l == at) continue;
        if (sol.at_infinity) {
            if (!s.points[l].inf && std::abs(s.points[l].v) > 1e-14)
                r = std::min(r, 1.0 / std::abs(s.points[l].v));
        } else if (!s.points[l].inf) {
            r = std::min(r, std::abs(s.points[l].v - sol.base_point));
        }
    }
    sol.radius = (r == 1e30) ? 1.0 : r;
    return sol;
}

// Frobenius pair belonging to (mu_i, mu_i'); generic branch only
inline std::pair<LocalSolution, LocalSolution> pe_local_solutions(const PSymbol& s, int at) {
    cplx diff = s.mu[at].second - s.mu[at].first;
    if (std::abs(diff.imag()) < 1e-10 &&
        std::abs(diff.real() - std::round(diff.real())) < 1e-10)
        throw ResonantExponents("integer exponent difference: logarithmic case unsupported");
    return {frobenius_solution(s, at, false), frobenius_solution(s, at, true)};
}

// --- Delta_i factors ----------------------------------------------------------

// Principal-branch value of Delta_i(t).  For points (0,1,inf) the closed
// forms are used, so that Delta_1^rho + Delta_2^rho + Delta_3^rho = 0 holds
// exactly with principal powers.
inline cplx delta_factor(const PSymbol& s, int i, cplx t) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    for (int l = 0; l < 3; ++l)
        if (!s.points[l].inf && std::abs(t - s.points[l].v) < 1e-13)
            throw SingularArgument("Delta_i at a singular point");
    bool std_pts = !s.points[0].inf && !s.points[1].inf && s.points[2].inf &&
                   std::abs(s.points[0].v) < 1e-14 && std::abs(s.points[1].v - 1.0) < 1e-14;
    if (std_pts) {
        cplx m1 = s.mu[0].first, m2 = s.mu[1].first, m3 = s.mu[2].first;
        switch (i) {
            case 0: return std::pow(-t, m2 + m3) * std::pow(t - 1.0, -m2);
            case 1: return std::pow(-t, -m1) * std::pow(t - 1.0, m1 + m3);
            default: return std::pow(-t, -m1) * std::pow(t - 1.0, -m2);
        }
    }
    auto pt = [&](int l) { return s.points[l]; };
    cplx mj = s.mu[j].first, mk = s.mu[k].first;
    // -(t_i - t)(t_j - t_k)/((t - t_j)(t_k - t_i)), with limits at infinity
    auto bracket1 = [&]() -> cplx {
        if (pt(i).inf) return (pt(j).v - pt(k).v) / (t - pt(j).v);
        if (pt(j).inf) return (pt(i).v - t) / (pt(k).v - pt(i).v);
        if (pt(k).inf) return (pt(i).v - t) / (t - pt(j).v);
        return -(pt(i).v - t) * (pt(j).v - pt(k).v) / ((t - pt(j).v) * (pt(k).v - pt(i).v));
    };
    // -(t - t_i)(t_j - t_k)/((t_k - t)(t_i - t_j)), with limits at infinity
    auto bracket2 = [&]() -> cplx {
        if (pt(i).inf) return (pt(j).v - pt(k).v) / (pt(k).v - t);
        if (pt(j).inf) return (t - pt(i).v) / (pt(k).v - t);
        if (pt(k).inf) return (t - pt(i).v) / (pt(i).v - pt(j).v);
        return -(t - pt(i).v) * (pt(j).v - pt(k).v) / ((pt(k).v - t) * (pt(i).v - pt(j).v));
    };
    return std::pow(bracket1(), mj) * std::pow(bracket2(), mk);
}

// logarithmic derivative (Delta_i)'/Delta_i, a rational function of t
inline cplx delta_log_derivative(const PSymbol& s, int i, cplx t) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    cplx mj = s.mu[j].first, mk = s.mu[k].first;
    cplx acc = 0;
    if (!s.points[i].inf) acc += (mj + mk) / (t - s.points[i].v);
    if (!s.points[j].inf) acc -= mj / (t - s.points[j].v);
    if (!s.points[k].inf) acc -= mk / (t - s.points[k].v);
    return acc;
}

// --- Weierstrass elliptic function --------------------------------------------

struct WeierstrassParams {
    cplx g2{}, g3{};
};

// (wp, wp') by truncated Laurent series plus repeated duplication; internal
// arithmetic in extended precision, since the duplication steps can pass
// near half-periods where wp' is small
inline std::pair<cplx, cplx> weierstrass_p(const WeierstrassParams& w, cplx z) {
    using C = std::complex<long double>;
    if (std::abs(z) < 1e-12) throw LatticePoint("wp at a lattice point");
    // scale-normalize the invariants to O(1)
    double s = std::max(std::pow(std::abs(w.g2), 0.25), std::pow(std::abs(w.g3), 1.0 / 6.0));
    if (s < 1e-8) s = 1.0;
    C g2 = C(w.g2) / C(std::pow((long double)s, 4));
    C g3 = C(w.g3) / C(std::pow((long double)s, 6));
    C zz = C(z) * C((long double)s);

    static const int KMAX = 14;
    int halvings = 0;
    while (std::abs(zz) > 0.30L) {
        zz /= 2.0L;
        ++halvings;
        if (halvings > 60) throw Error("weierstrass_p: argument too large");
    }
    std::vector<C> c(KMAX + 1);
    if (KMAX >= 2) c[2] = g2 / 20.0L;
    if (KMAX >= 3) c[3] = g3 / 28.0L;
    for (int k = 4; k <= KMAX; ++k) {
        C acc = 0;
        for (int m = 2; m <= k - 2; ++m) acc += c[m] * c[k - m];
        c[k] = 3.0L * acc / C((2.0L * k + 1.0L) * (k - 3.0L));
    }
    C z2 = zz * zz;
    C p = C(1) / z2, dp = C(-2) / (z2 * zz);
    C zpow = z2;
    for (int k = 2; k <= KMAX; ++k) {
        p += c[k] * zpow;                            // z^{2k-2}
        dp += C(2.0L * k - 2.0L) * c[k] * zpow / zz; // z^{2k-3}
        zpow *= z2;
    }
    for (int it = 0; it < halvings; ++it) {
        C u = p, v = dp;
        if (std::abs(v) < 1e-17L)
            throw LatticePoint("wp duplication through a half-period");
        C w2 = 6.0L * u * u - g2 / 2.0L;
        p = w2 * w2 / (4.0L * v * v) - 2.0L * u;
        dp = 3.0L * u * w2 / v - w2 * w2 * w2 / (4.0L * v * v * v) - v;
        if (std::abs(p) > 1e14L) throw LatticePoint("wp near a lattice point");
    }
    long double s2 = (long double)s * s;
    return {cplx((double)(p.real() * s2), (double)(p.imag() * s2)),
            cplx((double)(dp.real() * s2 * s), (double)(dp.imag() * s2 * s))};
}

// jet of wp in tau (value and three derivatives) via wp'' = 6 wp^2 - g2/2
inline Jet weierstrass_p_jet(const WeierstrassParams& w, cplx z) {
    auto [p, dp] = weierstrass_p(w, z);
    return Jet(p, dp, 6.0 * p * p - w.g2 / 2.0, 12.0 * p * dp);
}

} // namespace gdh
