#pragma once

// Papperitz-based parametric integration of proper gDH systems, its DH
// specialization via solution ratios, the x <-> t correspondence maps, the
// generalized Schwarzian residual operators, and the DH Moebius symmetry.

#include <array>
#include <functional>
#include <variant>
#include <vector>

#include "gdh/papperitz.hpp"
#include "gdh/params.hpp"

namespace gdh {

struct GseParams {
    std::array<ExtC, 3> points;
    std::array<std::pair<cplx, cplx>, 3> nu;
    cplx nbar{};

    cplx fuchs_defect() const {
        cplx s = 0;
        for (const auto& [n, np] : nu) s += n + np;
        return s - (1.0 - 2.0 * nbar);
    }
    cplx rho_inv() const { return nu[0].first + nu[1].first + nu[2].first + nbar; }
};

inline GseParams gse_from_alt(const AltParams& v,
                              std::array<ExtC, 3> points = {ExtC(cplx(0)), ExtC(cplx(1)),
                                                            ExtC::infinity()}) {
    return GseParams{points, v.nu, v.nbar};
}

namespace detail {

// rotate indices so that an infinite singular value, if any, sits in slot 2;
// all correspondence formulas are symmetric under simultaneous permutations
template <class T>
std::array<T, 3> rotate3(const std::array<T, 3>& v, int shift) {
    std::array<T, 3> r;
    for (int i = 0; i < 3; ++i) r[(i + shift) % 3] = v[i];
    return r;
}

inline int inf_slot(const std::array<ExtC, 3>& pts) {
    for (int i = 0; i < 3; ++i)
        if (pts[i].inf) return i;
    return -1;
}

} // namespace detail

// t from x by the cross-ratio-style formula; coincident pairs map to the
// corresponding singular value (invariant plane)
inline ExtC x_to_t(const std::array<ExtC, 3>& points, const Vec3& x,
                   double tol = 1e-13) {
    double scale = std::max(1.0, norm_inf(x));
    cplx y1 = x[1] - x[2], y2 = x[2] - x[0], y3 = x[0] - x[1];
    if (std::abs(y1) < tol * scale && std::abs(y2) < tol * scale &&
        std::abs(y3) < tol * scale)
        throw CoincidentComponents("x_to_t: all components coincide");
    if (std::abs(y1) < tol * scale) return points[0];
    if (std::abs(y2) < tol * scale) return points[1];
    if (std::abs(y3) < tol * scale) return points[2];
    int m = detail::inf_slot(points);
    if (m == -1) {
        cplx t1 = points[0].v, t2 = points[1].v, t3 = points[2].v;
        cplx num = t1 * t2 * (x[0] - x[1]) + t2 * t3 * (x[1] - x[2]) +
                   t3 * t1 * (x[2] - x[0]);
        cplx den = t1 * (x[1] - x[2]) + t2 * (x[2] - x[0]) + t3 * (x[0] - x[1]);
        if (std::abs(den) < 1e-300) return ExtC::infinity();
        return ExtC(-num / den);
    }
    // t_m infinite: keep the terms proportional to t_m
    int j = (m + 1) % 3, k = (m + 2) % 3;
    int prev = (m + 2) % 3;
    cplx num = points[prev].v * (x[prev] - x[m]) + points[j].v * (x[m] - x[j]);
    cplx den = x[j] - x[k];
    return ExtC(-num / den);
}

// x from (t, tdot, tddot); the reverse half of the gDH <-> gSE bijection
inline Vec3 t_to_x(const GseParams& g, cplx c, cplx t, cplx tdot, cplx tddot,
                   double tol = 1e-12) {
    if (std::abs(tdot) < 1e-300) throw ZeroDerivative("t_to_x: tdot = 0");
    for (int l = 0; l < 3; ++l)
        if (!g.points[l].inf && std::abs(t - g.points[l].v) < tol)
            throw SingularValue("t_to_x: t at a singular value");
    cplx rho_inv = g.rho_inv();
    cplx common = tddot / tdot;
    for (int l = 0; l < 3; ++l) {
        if (g.points[l].inf) continue;
        common -= (g.nu[l].first + g.nbar) / g.nbar * tdot / (t - g.points[l].v);
    }
    Vec3 x;
    for (int i = 0; i < 3; ++i) {
        cplx extra = 0;
        if (!g.points[i].inf)
            extra = rho_inv / g.nbar * tdot / (t - g.points[i].v);
        x[i] = (common + extra) / c;
    }
    return x;
}

// tdot along a noncoincident solution of the corresponding gDH system
inline cplx tdot_from_x(const GseParams& g, cplx c, const Vec3& x) {
    cplx rho = 1.0 / g.rho_inv();
    int m = detail::inf_slot(g.points);
    cplx xprod = (x[0] - x[1]) * (x[1] - x[2]) * (x[2] - x[0]);
    if (m == -1) {
        cplx t1 = g.points[0].v, t2 = g.points[1].v, t3 = g.points[2].v;
        cplx den = t1 * (x[1] - x[2]) + t2 * (x[2] - x[0]) + t3 * (x[0] - x[1]);
        return c * g.nbar * rho * (t1 - t2) * (t2 - t3) * (t3 - t1) * xprod / (den * den);
    }
    // limit as t_m -> infinity: the two differences through t_m contribute
    // -t_m^2 against t_m^2 (x_j - x_k)^2 in the denominator
    int j = (m + 1) % 3, k = (m + 2) % 3;
    cplx den = x[j] - x[k];
    return c * g.nbar * rho * (g.points[k].v - g.points[j].v) * xprod / (den * den);
}

// tddot/tdot along a noncoincident solution
inline cplx tddot_over_tdot_from_x(const GseParams& g, cplx c, const Vec3& x) {
    cplx rho = 1.0 / g.rho_inv();
    auto wminus = [&](int i) { return g.nu[i].first - g.nbar; };
    auto wplus = [&](int i) { return g.nu[i].first + g.nbar; };
    int m = detail::inf_slot(g.points);
    if (m == -1) {
        cplx num = 0, den = 0;
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            cplx ti = g.points[i].v;
            num += ti * (x[j] - x[k]) *
                   (wminus(i) * x[i] + wplus(j) * x[j] + wplus(k) * x[k]);
            den += ti * (x[j] - x[k]);
        }
        return c * rho * num / den;
    }
    int j = (m + 1) % 3, k = (m + 2) % 3;
    return c * rho * (wminus(m) * x[m] + wplus(j) * x[j] + wplus(k) * x[k]);
}

// --- Schwarzian residuals -----------------------------------------------------

// left-hand side of the generalized Schwarzian equation at a jet of t(tau)
inline cplx gse_residual(const GseParams& g, const Jet& t) {
    if (std::abs(g.fuchs_defect()) > 1e-9)
        throw FuchsViolation("gse_residual: Fuchsian condition violated");
    cplx tv = t.d[0], td = t.d[1], tdd = t.d[2], tddd = t.d[3];
    if (std::abs(td) < 1e-300) throw ZeroDerivative("gse_residual: tdot = 0");
    // rotate an infinite singular value into the last slot
    std::array<ExtC, 3> pts = g.points;
    auto nu = g.nu;
    int m = detail::inf_slot(pts);
    if (m != -1 && m != 2) {
        int shift = (2 - m + 3) % 3;
        pts = detail::rotate3(pts, shift);
        nu = detail::rotate3(nu, shift);
    }
    cplx nbar = g.nbar;
    auto P = [&](int i) { return (nu[i].first + nbar) * (nu[i].second + nbar); };
    auto M = [&](int i) { return (nu[i].first - nbar) * (nu[i].second - nbar); };
    cplx acc = tddd / (td * td * td) + (nbar - 2.0) * (tdd * tdd) / (td * td * td * td);
    cplx br = 0;
    for (int i = 0; i < 3; ++i) {
        if (pts[i].inf) continue;
        br += (1.0 - (nu[i].first + nbar) - (nu[i].second + nbar)) / (tv - pts[i].v);
    }
    acc += br * tdd / (td * td);
    cplx sum = 0;
    bool infinite = pts[2].inf;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        if (!pts[i].inf)
            sum += P(i) / ((tv - pts[i].v) * (tv - pts[i].v));
        if (infinite) {
            // only the cross term with both factors finite survives
            if (i == 2)
                sum += (M(2) - P(0) - P(1)) / ((tv - pts[0].v) * (tv - pts[1].v));
        } else {
            sum += (M(i) - P(j) - P(k)) / ((tv - pts[j].v) * (tv - pts[k].v));
        }
    }
    return acc + sum / nbar;
}

// Schwarzian triangle equation residual (the DH specialization)
inline cplx se_residual(const std::array<ExtC, 3>& points,
                        const std::array<cplx, 3>& alpha, const Jet& t) {
    cplx tv = t.d[0], td = t.d[1], tdd = t.d[2], tddd = t.d[3];
    if (std::abs(td) < 1e-300) throw ZeroDerivative("se_residual: tdot = 0");
    cplx lhs = -tddd / (td * td * td) + 1.5 * (tdd * tdd) / (td * td * td * td);
    auto q = [&](int i) { return 1.0 - alpha[i] * alpha[i]; };
    cplx rhs = 0;
    int m = detail::inf_slot(points);
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        if (i != m) rhs += q(i) / ((tv - points[i].v) * (tv - points[i].v));
        if (j != m && k != m)
            rhs += (q(i) - q(j) - q(k)) / ((tv - points[j].v) * (tv - points[k].v));
    }
    return lhs - rhs / 2.0;
}

// jet of t(tau) synthesized from a gDH trajectory: tdot and tddot from the
// correspondence formulas, tdddot by one central difference with Richardson
inline Jet t_jet_from_trajectory(const GseParams& g, cplx c,
                                 const std::function<Vec3(cplx)>& x_at, cplx tau,
                                 double step = 1e-4) {
    auto tdd_at = [&](cplx s) {
        Vec3 x = x_at(s);
        return tddot_over_tdot_from_x(g, c, x) * tdot_from_x(g, c, x);
    };
    Vec3 x = x_at(tau);
    ExtC tv = x_to_t(g.points, x);
    if (tv.inf) throw SingularValue("t_jet_from_trajectory: t at infinity");
    cplx td = tdot_from_x(g, c, x);
    cplx tdd = tdd_at(tau);
    auto stencil = [&](double h) { return (tdd_at(tau + h) - tdd_at(tau - h)) / (2 * h); };
    cplx coarse = stencil(step), fine = stencil(step / 2);
    cplx tddd = (4.0 * fine - coarse) / 3.0;
    return Jet(tv.v, td, tdd, tddd);
}

// --- DH Moebius symmetry --------------------------------------------------------

// tau' = (A tau + B)/(C tau + D) with the matrix normalized into PSL(2,C);
// x_i' = (C tau + D)^2 x_i + (2/c) C (C tau + D).  (The x-shift coefficient
// comes from the Wronskian of the solution pair; it equals c/2 only at the
// default normalization c = 2.)
inline Trajectory dh_mobius_transform(const std::array<std::array<cplx, 2>, 2>& m_in,
                                      cplx c, const Trajectory& tr) {
    cplx det = m_in[0][0] * m_in[1][1] - m_in[0][1] * m_in[1][0];
    if (std::abs(det) < 1e-14) throw SingularMatrix("dh_mobius_transform");
    cplx s = std::sqrt(det);
    std::array<std::array<cplx, 2>, 2> m{{{m_in[0][0] / s, m_in[0][1] / s},
                                          {m_in[1][0] / s, m_in[1][1] / s}}};
    Trajectory out;
    for (size_t idx = 0; idx < tr.tau.size(); ++idx) {
        cplx tau = tr.tau[idx];
        cplx den = m[1][0] * tau + m[1][1];
        if (std::abs(den) < 1e-12) continue;
        out.tau.push_back((m[0][0] * tau + m[0][1]) / den);
        Vec3 x;
        for (int i = 0; i < 3; ++i)
            x[i] = den * den * tr.states[idx][i] + (2.0 / c) * m[1][0] * den;
        out.states.push_back(x);
        out.local_error.push_back(idx < tr.local_error.size() ? tr.local_error[idx] : 0.0);
    }
    return out;
}

// --- parametric integration -----------------------------------------------------

struct IntegrationSetup {
    PSymbol psym;
    std::array<cplx, 3> kappa{cplx(0), cplx(0), cplx(1)};
    cplx nbar{};
    cplx c{};
    // PE solution choice: a mixing pair (K1, K2) over a Frobenius basis, or a
    // raw (f, f') seed at an ordinary point
    enum class Basis { frobenius_pair, frobenius_cross, seed };
    Basis basis{Basis::frobenius_pair};
    int basis_point{0};    // pair: both exponents here
    int basis_point2{1};   // cross: primed exponents at basis_point/basis_point2
    cplx K1{1.0}, K2{0.5};
    cplx seed_t{}, seed_f{1.0}, seed_fp{0.0};
    cplx tau0{};

    std::pair<cplx, cplx> nu_pair(int i) const {
        cplx shift = (2.0 * kappa[i] - 1.0) * nbar;
        return {psym.mu[i].first + shift, psym.mu[i].second + shift};
    }
    AltParams alt() const {
        AltParams v;
        for (int i = 0; i < 3; ++i) v.nu[i] = nu_pair(i);
        v.nbar = nbar;
        v.c = c;
        return v;
    }
    GseParams gse() const { return GseParams{psym.points, alt().nu, nbar}; }
};

struct ParametricSample {
    cplx t;
    cplx tau;
    Vec3 x;
    Vec3 dx_dtau;  // analytic, for residual diagnostics
};

namespace detail {

// value of log K^2 at a point, principal branches of the eq-specific brackets
inline cplx log_k2(const PSymbol& s, const std::array<cplx, 3>& kappa, cplx t) {
    cplx acc = 0;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        cplx br;
        bool iinf = s.points[i].inf, jinf = s.points[j].inf, kinf = s.points[k].inf;
        cplx ti = s.points[i].v, tj = s.points[j].v, tk = s.points[k].v;
        if (iinf) {
            // [(t-ti)^2 (tj-tk)/((ti-tj)(tk-ti))]^kappa -> [-(tj-tk)] limit
            br = -(tj - tk);
        } else if (jinf) {
            br = -(t - ti) * (t - ti) / (tk - ti);
        } else if (kinf) {
            br = -(t - ti) * (t - ti) / (ti - tj);
        } else {
            br = (t - ti) * (t - ti) * (tj - tk) / ((ti - tj) * (tk - ti));
        }
        acc += kappa[i] * std::log(br);
    }
    return acc;
}

} // namespace detail

// Integrate tau(t) = tau0 + int K^-2 f^(-1/nbar) dt along the polyline through
// t_samples, carrying the PE solution f and continuous branches of log f and
// log K^2; returns (t, tau, x, dx/dtau) at each sample.
inline std::vector<ParametricSample> parametric_integrate(
    const IntegrationSetup& setup, const std::vector<cplx>& t_samples) {
    if (t_samples.size() < 2) throw Error("parametric_integrate: need >= 2 samples");
    const PSymbol& s = setup.psym;
    s.validate();
    if (std::abs(setup.nbar) < 1e-12) throw ImproperParameters("nbar = 0");
    cplx ksum = setup.kappa[0] + setup.kappa[1] + setup.kappa[2];
    if (std::abs(ksum - 1.0) > 1e-12)
        throw ImproperParameters("offset vector must satisfy kappa1+kappa2+kappa3 = 1");
    AltParams alt = setup.alt();
    if (std::abs(alt.rho_inv()) < 1e-12)
        throw ImproperParameters("parametric_integrate: rho pole");

    // initial PE data at the first sample
    cplx anchor = t_samples.front();
    cplx f0, fp0;
    switch (setup.basis) {
        case IntegrationSetup::Basis::frobenius_pair: {
            auto [s1, s2] = pe_local_solutions(s, setup.basis_point);
            auto [a1, a1p] = s1.eval(anchor);
            auto [a2, a2p] = s2.eval(anchor);
            f0 = setup.K1 * a1 + setup.K2 * a2;
            fp0 = setup.K1 * a1p + setup.K2 * a2p;
            break;
        }
        case IntegrationSetup::Basis::frobenius_cross: {
            LocalSolution s1 = frobenius_solution(s, setup.basis_point, true);
            LocalSolution s2 = frobenius_solution(s, setup.basis_point2, true);
            auto [a1, a1p] = s1.eval(anchor);
            auto [a2, a2p] = s2.eval(anchor);
            f0 = setup.K1 * a1 + setup.K2 * a2;
            fp0 = setup.K1 * a1p + setup.K2 * a2p;
            break;
        }
        case IntegrationSetup::Basis::seed: {
            PeCoeffs pe{s};
            detail::State<2> y{setup.seed_f, setup.seed_fp};
            if (std::abs(setup.seed_t - anchor) > 1e-14) {
                IntegratorConfig cfg;
                cfg.rel_tol = cfg.abs_tol = 1e-13;
                integrate_ode<2>(
                    [&](cplx tt, const detail::State<2>& yy) -> detail::State<2> {
                        return {yy[1], -pe.P1(tt) * yy[1] - pe.P2(tt) * yy[0]};
                    },
                    y, {setup.seed_t, anchor}, cfg);
            }
            f0 = y[0];
            fp0 = y[1];
            break;
        }
    }
    if (std::abs(f0) < 1e-300) throw PathThroughSingularity("f vanishes at the anchor");

    PeCoeffs pe{s};
    // state: f, f', L = log f, A = log K^2, tau
    detail::State<5> y{f0, fp0, std::log(f0), detail::log_k2(s, setup.kappa, anchor),
                       setup.tau0};
    std::vector<ParametricSample> out;
    auto emit = [&](cplx t, const detail::State<5>& st) {
        ParametricSample ps;
        ps.t = t;
        cplx dtau_dt = std::exp(-st[3] - st[2] / setup.nbar);
        ps.tau = st[4];
        cplx flog = st[1] / st[0];
        Vec3 u, du;
        cplx dlogk2 = 0;
        for (int l = 0; l < 3; ++l)
            if (!s.points[l].inf) dlogk2 += 2.0 * setup.kappa[l] / (t - s.points[l].v);
        cplx fpp = -pe.P1(t) * st[1] - pe.P2(t) * st[0];
        for (int i = 0; i < 3; ++i) {
            u[i] = flog + delta_log_derivative(s, i, t);
            // d/dt of delta log derivative
            int j = (i + 1) % 3, k = (i + 2) % 3;
            cplx d2 = 0;
            if (!s.points[i].inf)
                d2 -= (s.mu[j].first + s.mu[k].first) /
                      ((t - s.points[i].v) * (t - s.points[i].v));
            if (!s.points[j].inf)
                d2 += s.mu[j].first / ((t - s.points[j].v) * (t - s.points[j].v));
            if (!s.points[k].inf)
                d2 += s.mu[k].first / ((t - s.points[k].v) * (t - s.points[k].v));
            du[i] = (fpp / st[0] - flog * flog) + d2;
        }
        cplx G = 1.0 / dtau_dt;
        cplx dG = G * (dlogk2 + flog / setup.nbar);
        for (int i = 0; i < 3; ++i) {
            ps.x[i] = u[i] * G / (setup.c * setup.nbar);
            cplx dxdt = (dG * u[i] + G * du[i]) / (setup.c * setup.nbar);
            ps.dx_dtau[i] = dxdt * G;
        }
        out.push_back(ps);
    };
    emit(anchor, y);
    IntegratorConfig cfg;
    cfg.rel_tol = cfg.abs_tol = 1e-12;
    for (size_t i = 0; i + 1 < t_samples.size(); ++i) {
        for (int l = 0; l < 3; ++l)
            if (!s.points[l].inf &&
                detail::dist_segment_point(t_samples[i], t_samples[i + 1],
                                           s.points[l].v) < 1e-9)
                throw PathThroughSingularity("sample polyline passes a singular point");
        integrate_ode<5>(
            [&](cplx tt, const detail::State<5>& st) -> detail::State<5> {
                cplx flog = st[1] / st[0];
                cplx dA = 0;
                for (int l = 0; l < 3; ++l)
                    if (!s.points[l].inf) dA += 2.0 * setup.kappa[l] / (tt - s.points[l].v);
                return {st[1], -pe.P1(tt) * st[1] - pe.P2(tt) * st[0], flog, dA,
                        std::exp(-st[3] - st[2] / setup.nbar)};
            },
            y, {t_samples[i], t_samples[i + 1]}, cfg);
        emit(t_samples[i + 1], y);
    }
    return out;
}

// gDH parameters produced by a parametric integration setup
inline GdhParams parametric_system(const IntegrationSetup& setup) {
    return alt_to_gdh(setup.alt());
}

// --- DH ratio integration -------------------------------------------------------

struct DhIntegrationSetup {
    std::array<cplx, 3> alpha{};
    cplx c{2.0};
    std::array<cplx, 3> kappa{cplx(0), cplx(0), cplx(1)};
    std::array<ExtC, 3> points{ExtC(cplx(0)), ExtC(cplx(1)), ExtC::infinity()};
    // (f1, f2) are seeded by their values and derivatives at the first
    // sample: f_i(anchor) = mix[i][0], f_i'(anchor) = mix[i][1].  The default
    // is a generic independent pair with both functions nonzero there.
    std::array<std::array<cplx, 2>, 2> mix{{{cplx(1), cplx(0.3)}, {cplx(-0.2), cplx(1)}}};

    PSymbol psym() const {
        PSymbol s;
        s.points = points;
        for (int i = 0; i < 3; ++i)
            s.mu[i] = {(1.0 - alpha[i]) / 2.0 - kappa[i],
                       (1.0 + alpha[i]) / 2.0 - kappa[i]};
        return s;
    }
};

// tau = f1/f2, x_i = (2/c) d/dtau log(Delta_i f2)
inline std::vector<ParametricSample> dh_parametric_integrate(
    const DhIntegrationSetup& setup, const std::vector<cplx>& t_samples) {
    if (t_samples.size() < 2) throw Error("dh_parametric_integrate: need >= 2 samples");
    PSymbol s = setup.psym();
    s.validate();
    if (std::abs(setup.alpha[0] + setup.alpha[1] + setup.alpha[2] - 1.0) < 1e-12)
        throw ImproperParameters("DH system not proper: alpha sum = 1");
    PeCoeffs pe{s};
    // state: f1, f1', f2, f2'
    detail::State<4> y{setup.mix[0][0], setup.mix[0][1], setup.mix[1][0], setup.mix[1][1]};
    std::vector<ParametricSample> out;
    auto emit = [&](cplx t, const detail::State<4>& st) {
        ParametricSample ps;
        ps.t = t;
        cplx f1 = st[0], f1p = st[1], f2 = st[2], f2p = st[3];
        cplx W = f1p * f2 - f1 * f2p;
        ps.tau = f1 / f2;
        cplx G = f2 * f2 / W;  // 1/(dtau/dt), dtau/dt = W/f2^2
        cplx fpp2 = -pe.P1(t) * f2p - pe.P2(t) * f2;
        for (int i = 0; i < 3; ++i) {
            cplx u = f2p / f2 + delta_log_derivative(s, i, t);
            int j = (i + 1) % 3, k = (i + 2) % 3;
            cplx d2 = 0;
            if (!s.points[i].inf)
                d2 -= (s.mu[j].first + s.mu[k].first) /
                      ((t - s.points[i].v) * (t - s.points[i].v));
            if (!s.points[j].inf)
                d2 += s.mu[j].first / ((t - s.points[j].v) * (t - s.points[j].v));
            if (!s.points[k].inf)
                d2 += s.mu[k].first / ((t - s.points[k].v) * (t - s.points[k].v));
            cplx du = fpp2 / f2 - (f2p / f2) * (f2p / f2) + d2;
            ps.x[i] = 2.0 / setup.c * u * G;
            cplx dG = G * (2.0 * f2p / f2 + pe.P1(t));  // from W' = -P1 W
            cplx dxdt = 2.0 / setup.c * (dG * u + G * du);
            ps.dx_dtau[i] = dxdt * G;
        }
        out.push_back(ps);
    };
    emit(t_samples.front(), y);
    IntegratorConfig cfg;
    cfg.rel_tol = cfg.abs_tol = 1e-12;
    for (size_t i = 0; i + 1 < t_samples.size(); ++i) {
        integrate_ode<4>(
            [&](cplx tt, const detail::State<4>& st) -> detail::State<4> {
                return {st[1], -pe.P1(tt) * st[1] - pe.P2(tt) * st[0], st[3],
                        -pe.P1(tt) * st[3] - pe.P2(tt) * st[2]};
            },
            y, {t_samples[i], t_samples[i + 1]}, cfg);
        emit(t_samples[i + 1], y);
    }
    return out;
}

} // namespace gdh
