#pragma once

// Componentwise fractions of multivariate polynomials and their exact
// Jacobians (quotient rule, no simplification).

#include <array>
#include <vector>

#include "gdh/mpoly.hpp"

namespace gdh {

struct RationalFn {
    MPoly num;
    MPoly den;

    template <class C>
    C eval(std::span<const C> xs) const {
        C d = den.eval<C>(xs);
        if (d == C(0)) throw SingularLocus("rational function pole");
        return num.eval<C>(xs) / d;
    }

    // degree of homogeneity (num and den homogeneous); num degree minus den degree
    std::optional<int> homogeneity() const {
        if (!num.is_homogeneous() || !den.is_homogeneous()) return std::nullopt;
        if (num.is_zero()) return 0;
        return *num.degree() - *den.degree();
    }
};

struct RationalMap {
    std::vector<RationalFn> comps;

    const std::vector<std::string>& vars() const { return comps.front().num.vars(); }

    template <class C>
    std::vector<C> eval(std::span<const C> xs) const {
        std::vector<C> out;
        out.reserve(comps.size());
        for (const auto& f : comps) out.push_back(f.eval<C>(xs));
        return out;
    }
};

// exact Jacobian D(N/D) = (N' D - N D') / D^2
inline std::vector<std::vector<RationalFn>> rational_map_jacobian(const RationalMap& m) {
    std::vector<std::vector<RationalFn>> jac;
    const auto& vars = m.vars();
    for (const auto& f : m.comps) {
        std::vector<RationalFn> row;
        MPoly d2 = f.den * f.den;
        for (const auto& v : vars) {
            MPoly n = f.num.partial(v) * f.den - f.num * f.den.partial(v);
            row.push_back(RationalFn{std::move(n), d2});
        }
        jac.push_back(std::move(row));
    }
    return jac;
}

inline RationalMap identity_map(std::vector<std::string> vars) {
    RationalMap m;
    for (const auto& v : vars) {
        MPoly one = MPoly::constant(vars, ExtRational(1));
        m.comps.push_back(RationalFn{MPoly::variable(vars, v), one});
    }
    return m;
}

} // namespace gdh
