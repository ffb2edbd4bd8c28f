#pragma once

// Complex-plane ODE integration for small systems (embedded Dormand-Prince
// 5(4) pair along polyline paths), trajectory records, residual diagnostics,
// and finite-difference derivative oracles.

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "gdh/systems.hpp"

namespace gdh {

struct IntegratorConfig {
    double rel_tol = 1e-12;
    double abs_tol = 1e-12;
    double max_step = 0.05;
    double pole_guard = 1e8;
    long max_steps = 4000000;
};

struct Trajectory {
    std::vector<cplx> tau;
    std::vector<Vec3> states;
    std::vector<double> local_error;
};

namespace detail {

// Dormand-Prince coefficients
constexpr double DP_C[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double DP_A[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double DP_B5[7] = {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192,
                             -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double DP_B4[7] = {5179.0 / 57600, 0.0, 7571.0 / 16695, 393.0 / 640,
                             -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

template <size_t N>
using State = std::array<cplx, N>;

template <size_t N>
double state_norm(const State<N>& s) {
    double m = 0;
    for (const auto& z : s) m = std::max(m, std::abs(z));
    return m;
}

} // namespace detail

// Integrate dy/dt = f(t, y) from path[0] to path.back() along the straight
// segments of `path`, calling `record` at every accepted step.
template <size_t N>
void integrate_ode(const std::function<detail::State<N>(cplx, const detail::State<N>&)>& f,
                   detail::State<N>& y, const std::vector<cplx>& path,
                   const IntegratorConfig& cfg,
                   const std::function<void(cplx, const detail::State<N>&, double)>& record = {},
                   const std::function<bool(const detail::State<N>&)>& guard = {}) {
    using S = detail::State<N>;
    long steps = 0;
    for (size_t seg = 0; seg + 1 < path.size(); ++seg) {
        cplx a = path[seg], b = path[seg + 1];
        double len = std::abs(b - a);
        if (len == 0.0) continue;
        cplx dir = (b - a) / len;
        double s = 0.0;
        double h = std::min(cfg.max_step, len);
        auto fs = [&](double sv, const S& yv) {
            S d = f(a + dir * sv, yv);
            for (auto& z : d) z *= dir;
            return d;
        };
        while (s < len) {
            if (++steps > cfg.max_steps) throw StepUnderflow("step limit exceeded");
            h = std::min(h, len - s);
            if (h < 1e-14 * std::max(1.0, len)) throw StepUnderflow("step underflow");
            std::array<S, 7> k;
            k[0] = fs(s, y);
            S y5{}, y4{};
            for (int st = 1; st < 7; ++st) {
                S yy = y;
                for (int m = 0; m < st; ++m)
                    for (size_t q = 0; q < N; ++q)
                        yy[q] += h * detail::DP_A[st][m] * k[m][q];
                k[st] = fs(s + detail::DP_C[st] * h, yy);
            }
            y5 = y;
            y4 = y;
            for (int st = 0; st < 7; ++st)
                for (size_t q = 0; q < N; ++q) {
                    y5[q] += h * detail::DP_B5[st] * k[st][q];
                    y4[q] += h * detail::DP_B4[st] * k[st][q];
                }
            double err = 0;
            for (size_t q = 0; q < N; ++q) {
                double sc = cfg.abs_tol +
                            cfg.rel_tol * std::max(std::abs(y[q]), std::abs(y5[q]));
                err = std::max(err, std::abs(y5[q] - y4[q]) / sc);
            }
            if (err <= 1.0) {
                s += h;
                y = y5;
                if (guard && !guard(y)) throw PoleEncountered("pole guard triggered");
                if (record) record(a + dir * s, y, err);
            }
            double fac = 0.9 * std::pow(err > 1e-20 ? err : 1e-20, -0.2);
            fac = std::clamp(fac, 0.2, 5.0);
            h = std::min(h * fac, cfg.max_step);
        }
    }
}

using Rhs3 = std::function<Vec3(const Vec3&)>;

inline Trajectory integrate_trajectory(const Rhs3& rhs, const Vec3& x0,
                                       const std::vector<cplx>& path,
                                       const IntegratorConfig& cfg = {}) {
    Trajectory tr;
    detail::State<3> y{x0[0], x0[1], x0[2]};
    tr.tau.push_back(path.front());
    tr.states.push_back(x0);
    tr.local_error.push_back(0.0);
    auto f = [&](cplx, const detail::State<3>& s) -> detail::State<3> {
        Vec3 v = rhs(Vec3{s[0], s[1], s[2]});
        return {v[0], v[1], v[2]};
    };
    auto rec = [&](cplx t, const detail::State<3>& s, double err) {
        tr.tau.push_back(t);
        tr.states.push_back(Vec3{s[0], s[1], s[2]});
        tr.local_error.push_back(err);
    };
    auto guard = [&](const detail::State<3>& s) {
        return detail::state_norm<3>(s) < cfg.pole_guard;
    };
    integrate_ode<3>(f, y, path, cfg, rec, guard);
    return tr;
}

// Integrate recording states exactly at the requested tau values (which are
// visited in order along the straight polyline through them).
inline std::vector<Vec3> integrate_at(const Rhs3& rhs, const Vec3& x0,
                                      const std::vector<cplx>& taus,
                                      const IntegratorConfig& cfg = {}) {
    std::vector<Vec3> out;
    out.push_back(x0);
    detail::State<3> y{x0[0], x0[1], x0[2]};
    auto f = [&](cplx, const detail::State<3>& s) -> detail::State<3> {
        Vec3 v = rhs(Vec3{s[0], s[1], s[2]});
        return {v[0], v[1], v[2]};
    };
    for (size_t i = 0; i + 1 < taus.size(); ++i) {
        integrate_ode<3>(f, y, {taus[i], taus[i + 1]}, cfg);
        out.push_back(Vec3{y[0], y[1], y[2]});
    }
    return out;
}

// Lagrange differentiation of analytic samples: derivative of the
// interpolating polynomial through (ts, vs) at ts[at].
inline cplx lagrange_derivative(std::span<const cplx> ts, std::span<const cplx> vs,
                                size_t at) {
    size_t n = ts.size();
    cplx acc = 0;
    for (size_t j = 0; j < n; ++j) {
        if (j == at) {
            // sum over m != at of prod_{q != at,m} (t-t_q)/(t_at-t_q) ... at t=t_at
            cplx s = 0;
            for (size_t m = 0; m < n; ++m)
                if (m != at) s += 1.0 / (ts[at] - ts[m]);
            acc += vs[at] * s;
        } else {
            cplx prod = 1.0 / (ts[j] - ts[at]);
            for (size_t q = 0; q < n; ++q) {
                if (q == j || q == at) continue;
                prod *= (ts[at] - ts[q]) / (ts[j] - ts[q]);
            }
            acc += vs[j] * prod;
        }
    }
    return acc;
}

// max over interior samples of |interpolated dx/dtau - rhs(x)|
inline double residual_along(const Rhs3& rhs, const Trajectory& tr, int window = 7) {
    size_t n = tr.tau.size();
    if (n < static_cast<size_t>(window)) throw TooFewSamples("residual_along");
    double worst = 0;
    std::vector<cplx> ts(window), vs(window);
    for (size_t c = 0; c + window <= n; ++c) {
        size_t mid = c + window / 2;
        for (int q = 0; q < window; ++q) ts[q] = tr.tau[c + q];
        Vec3 dx;
        for (int comp = 0; comp < 3; ++comp) {
            for (int q = 0; q < window; ++q) vs[q] = tr.states[c + q][comp];
            dx[comp] = lagrange_derivative(ts, vs, window / 2);
        }
        Vec3 f = rhs(tr.states[mid]);
        worst = std::max(worst, norm_inf(dx - f));
    }
    return worst;
}

// central differences with one Richardson step; order 1, 2 or 3.  Default
// steps grow with the order to balance truncation against roundoff.
inline cplx finite_difference(const std::function<cplx(cplx)>& f, cplx z, int order,
                              double step = 0.0) {
    double base = order == 1 ? 1e-4 : (order == 2 ? 1e-3 : 1e-2);
    double h = step > 0 ? step : base * std::max(1.0, std::abs(z));
    auto stencil = [&](double hh) -> cplx {
        switch (order) {
            case 1: return (f(z + hh) - f(z - hh)) / (2 * hh);
            case 2: return (f(z + hh) - 2.0 * f(z) + f(z - hh)) / (hh * hh);
            case 3:
                return (f(z + 2 * hh) - 2.0 * f(z + hh) + 2.0 * f(z - hh) -
                        f(z - 2 * hh)) / (2 * hh * hh * hh);
            default: throw Error("finite_difference: order must be 1, 2 or 3");
        }
    };
    cplx coarse = stencil(h), fine = stencil(h / 2);
    // both stencils are O(h^2); Richardson eliminates the leading term
    return (4.0 * fine - coarse) / 3.0;
}

// deterministic sampling helpers
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed = 0x5eed) : gen(seed) {}
    double real(double lo = -1.0, double hi = 1.0) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(gen);
    }
    cplx box(double r = 1.0) { return {real(-r, r), real(-r, r)}; }
    Vec3 vec3(double r = 1.0) { return {box(r), box(r), box(r)}; }
};

} // namespace gdh
