#pragma once

// Parameter algebra: the birational (a;b;c) <-> (nu,nu';nbar;c) correspondence,
// properness, DH standard/alternative forms, and the order-48 equivalence
// group of signed pair permutations.

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "gdh/systems.hpp"

namespace gdh {

struct AltParams {
    std::array<std::pair<cplx, cplx>, 3> nu;  // (nu_i, nu_i')
    cplx nbar{};
    cplx c{};

    cplx nu_sum() const { return nu[0].first + nu[1].first + nu[2].first; }
    cplx fuchs_defect() const {
        cplx s = 0;
        for (const auto& [n, np] : nu) s += n + np;
        return s - (1.0 - 2.0 * nbar);
    }
    std::array<cplx, 3> angular() const {
        return {nu[0].second - nu[0].first, nu[1].second - nu[1].first,
                nu[2].second - nu[2].first};
    }
    cplx rho_inv() const { return nu_sum() + nbar; }
};

struct PropernessReport {
    bool c_nonzero{};
    cplx rho_inv{};
    cplx nbar{};
    bool is_proper{};
    std::array<cplx, 3> angular{};
};

inline double properness_tol(const GdhParams& p) {
    return 1e-12 * std::max(1.0, std::abs(p.c));
}

inline PropernessReport properness(const GdhParams& p) {
    PropernessReport r;
    double tol = properness_tol(p);
    r.c_nonzero = std::abs(p.c) > tol;
    cplx ca = p.c - p.sum_a();
    cplx cb = 2.0 * p.c - p.sum_b();
    r.nbar = r.c_nonzero ? cb / p.c : cplx(0);
    if (std::abs(ca) > tol) {
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            std::array<cplx, 3> a = p.a(), b = p.b();
            r.angular[i] = (-p.c - a[i] + b[j] + b[k]) / ca;
        }
        r.rho_inv = (1.0 - r.angular[0] - r.angular[1] - r.angular[2]) / 2.0;
    }
    r.is_proper = r.c_nonzero && std::abs(ca) > tol && std::abs(cb) > tol;
    return r;
}

inline bool is_proper(const GdhParams& p) { return properness(p).is_proper; }

inline bool is_dh(const GdhParams& p, double tol = 1e-12) {
    double s = std::max(1.0, std::abs(p.c));
    return std::abs(p.b1 - p.c / 2.0) <= tol * s && std::abs(p.b2 - p.c / 2.0) <= tol * s &&
           std::abs(p.b3 - p.c / 2.0) <= tol * s;
}

// nbar = (2c - b1 - b2 - b3)/c, nu_i = nbar a_i/(c - a1 - a2 - a3),
// alpha_i = (-c - a_i + b_j + b_k)/(c - a1 - a2 - a3), nu_i' = nu_i + alpha_i
inline AltParams gdh_to_alt(const GdhParams& p) {
    double tol = properness_tol(p);
    cplx ca = p.c - p.sum_a();
    if (std::abs(p.c) <= tol || std::abs(ca) <= tol)
        throw ImproperParameters("gdh_to_alt: c = 0 or c = a1+a2+a3");
    AltParams v;
    v.c = p.c;
    v.nbar = (2.0 * p.c - p.sum_b()) / p.c;
    std::array<cplx, 3> a = p.a(), b = p.b();
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        cplx nu = v.nbar * a[i] / ca;
        cplx alpha = (-p.c - a[i] + b[j] + b[k]) / ca;
        v.nu[i] = {nu, nu + alpha};
    }
    return v;
}

// a_i = nu_i c rho, b_i = [-nbar nu_i' - (nbar-1)(nu_j + nu_k) - nbar(nbar-1)] c rho
inline GdhParams alt_to_gdh(const AltParams& v) {
    cplx rho_inv = v.rho_inv();
    if (std::abs(rho_inv) <= 1e-12 * std::max(1.0, std::abs(v.c)))
        throw ImproperParameters("alt_to_gdh: nu1+nu2+nu3+nbar = 0");
    cplx rho = 1.0 / rho_inv;
    GdhParams p;
    p.c = v.c;
    std::array<cplx, 3> a, b;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        a[i] = v.nu[i].first * v.c * rho;
        b[i] = (-v.nbar * v.nu[i].second -
                (v.nbar - 1.0) * (v.nu[j].first + v.nu[k].first) -
                v.nbar * (v.nbar - 1.0)) * v.c * rho;
    }
    p.a1 = a[0]; p.a2 = a[1]; p.a3 = a[2];
    p.b1 = b[0]; p.b2 = b[1]; p.b3 = b[2];
    return p;
}

// standardized DH(alpha1,alpha2,alpha3 | c): a_i = -alpha_i c/(1-sum alpha), b_i = c/2
inline GdhParams dh_standard(const std::array<cplx, 3>& alpha, cplx c) {
    cplx s = 1.0 - alpha[0] - alpha[1] - alpha[2];
    if (std::abs(s) <= 1e-12 || std::abs(c) <= 1e-12)
        throw ImproperParameters("dh_standard: alpha1+alpha2+alpha3 = 1 or c = 0");
    GdhParams p;
    p.a1 = -alpha[0] * c / s;
    p.a2 = -alpha[1] * c / s;
    p.a3 = -alpha[2] * c / s;
    p.b1 = p.b2 = p.b3 = c / 2.0;
    p.c = c;
    return p;
}

// --- alternative DH form ----------------------------------------------------

// y = M x with y_i = (1 - sum k) x_i + sum_l k_l x_l.  The transformed system
// is ydot_i = y_i^2 + quad_i (y_i-y_j)(y_k-y_i) - T^2 with
// T^2 = sum_i t2[i] (y_i-y_j)(y_k-y_i); quad_i = 1 exactly at the alternative
// Halphen offsets k = -(rho/2) alpha, where t2 reduces to alpha_i^2.
struct DhAltForm {
    Mat3 to_y;                 // x -> y
    Mat3 to_x;                 // y -> x
    std::array<cplx, 3> t2;    // coefficients of T^2
    std::array<cplx, 3> quad;  // induced coefficients of (y_i-y_j)(y_k-y_i)
    cplx c{};

    Vec3 rhs_y(const Vec3& y) const {
        cplx tsq = 0;
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            tsq += t2[i] * (y[i] - y[j]) * (y[k] - y[i]);
        }
        Vec3 r;
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            r[i] = y[i] * y[i] + quad[i] * (y[i] - y[j]) * (y[k] - y[i]) - tsq;
        }
        return r;
    }
};

inline DhAltForm dh_alt_form(const GdhParams& p, const std::array<cplx, 3>& k) {
    if (!is_dh(p)) throw NotDhSystem("dh_alt_form: not a DH system");
    auto rep = properness(p);
    if (!rep.is_proper) throw ImproperParameters("dh_alt_form: improper DH system");
    if (std::abs(p.c - 2.0) > 1e-12)
        throw NotDhSystem("dh_alt_form: normalization c = 2 required");
    cplx ks = k[0] + k[1] + k[2];
    if (std::abs(ks - 1.0) <= 1e-12)
        throw ImproperParameters("dh_alt_form: k1+k2+k3 = 1");
    DhAltForm f;
    f.c = p.c;
    cplx rho = 1.0 / rep.rho_inv;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) f.to_y[i][j] = (i == j) ? 1.0 - ks + k[i] : k[j];
    f.to_x = mat_inverse(f.to_y);
    for (int i = 0; i < 3; ++i) {
        f.t2[i] = -k[i] * (k[i] + rho * rep.angular[i]) / ((1.0 - ks) * (1.0 - ks));
        f.quad[i] = 1.0 + (rho * rep.angular[i] + 2.0 * k[i]) / (1.0 - ks);
    }
    return f;
}

// --- order-48 group ---------------------------------------------------------

// signed permutation of the three (nu_i, nu_i') pairs; perm[i] = image of i,
// sign[i] set = transpose nu_i <-> nu_i' before permuting
struct GroupElement {
    std::array<int, 3> perm{0, 1, 2};
    std::array<bool, 3> signs{false, false, false};

    static GroupElement identity() { return {}; }
    static GroupElement flip(int i) {
        GroupElement g;
        g.signs[i] = true;
        return g;
    }
    static GroupElement permutation(std::array<int, 3> p) {
        GroupElement g;
        g.perm = p;
        return g;
    }
    bool is_identity() const {
        return perm == std::array<int, 3>{0, 1, 2} && !signs[0] && !signs[1] && !signs[2];
    }
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// group law: (g2 * g1)(p) = g2(g1(p))
inline GroupElement compose(const GroupElement& g2, const GroupElement& g1) {
    GroupElement r;
    for (int i = 0; i < 3; ++i) r.perm[i] = g2.perm[g1.perm[i]];
    for (int i = 0; i < 3; ++i) r.signs[i] = g1.signs[i] ^ g2.signs[g1.perm[i]];
    return r;
}

inline std::vector<GroupElement> all_group_elements() {
    std::vector<GroupElement> out;
    std::array<int, 3> p{0, 1, 2};
    std::sort(p.begin(), p.end());
    do {
        for (int mask = 0; mask < 8; ++mask) {
            GroupElement g;
            g.perm = p;
            g.signs = {bool(mask & 1), bool(mask & 2), bool(mask & 4)};
            out.push_back(g);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

struct GroupAction {
    GdhParams params;  // transformed parameter vector
    Mat3 state_map;    // xbar = T x maps solutions of the input system
};

// the involution [i-]: transpose nu_i <-> nu_i' (explicit rational formulas)
inline GroupAction apply_sign_flip(int i, const GdhParams& p) {
    cplx cb = 2.0 * p.c - p.sum_b();
    std::array<cplx, 3> a = p.a(), b = p.b();
    cplx denom = p.c - a[i] - b[i];
    if (std::abs(denom) <= 1e-14 * std::max(1.0, std::abs(p.c)) ||
        std::abs(cb) <= 1e-14 * std::max(1.0, std::abs(p.c)))
        throw UndefinedTransform("sign flip: division by zero in parameter map");
    cplx f = cb / denom;
    std::array<cplx, 3> ab, bb;
    ab[i] = p.c - (p.c - a[i]) * f;
    bb[i] = -(p.c + a[i] - p.sum_b()) * f;
    for (int j = 0; j < 3; ++j) {
        if (j == i) continue;
        int k = 3 - i - j;
        ab[j] = a[j] * f;
        bb[j] = -(p.c - p.sum_b()) + (p.c - b[i] - b[k]) * f;
    }
    GroupAction act;
    act.params = make_gdh(ab[0], ab[1], ab[2], bb[0], bb[1], bb[2], p.c);
    // xbar_i = x_i, xbar_j = x_i + (1/f)(x_j - x_i)
    Mat3 t{};
    cplx lam = denom / cb;
    for (int j = 0; j < 3; ++j) {
        if (j == i) {
            t[i][i] = 1.0;
        } else {
            t[j][i] = 1.0 - lam;
            t[j][j] = lam;
        }
    }
    act.state_map = t;
    return act;
}

inline GroupAction apply_group_element(const GroupElement& g, const GdhParams& p) {
    GroupAction act{p, Mat3{}};
    for (int i = 0; i < 3; ++i) act.state_map[i][i] = 1.0;
    bool any_flip = g.signs[0] || g.signs[1] || g.signs[2];
    if (any_flip) {
        bool done = false;
        if (is_proper(p)) {
            // transpose the flipped pairs in nu-space; the composite state map
            // is T = (rho_inv_bar/rho_inv) I + (1/rho_inv) ones (w - wbar)^T
            // with w_l = nu_l + nbar
            AltParams v = gdh_to_alt(p);
            AltParams vb = v;
            for (int i = 0; i < 3; ++i)
                if (g.signs[i]) std::swap(vb.nu[i].first, vb.nu[i].second);
            cplx ri = v.rho_inv(), rib = vb.rho_inv();
            if (std::abs(rib) > 1e-12 * std::max(1.0, std::abs(p.c))) {
                act.params = alt_to_gdh(vb);
                Mat3 t{};
                for (int i = 0; i < 3; ++i) {
                    for (int j = 0; j < 3; ++j)
                        t[i][j] = (v.nu[j].first - vb.nu[j].first) / ri;
                    t[i][i] += rib / ri;
                }
                act.state_map = t;
                done = true;
            }
        }
        if (!done) {
            // improper input (or flipped rho pole): fall back to the printed
            // one-flip formulas, which do not need c - a1 - a2 - a3 != 0
            for (int i = 0; i < 3; ++i) {
                if (!g.signs[i]) continue;
                GroupAction step = apply_sign_flip(i, act.params);
                act.params = step.params;
                act.state_map = mat_mul(step.state_map, act.state_map);
            }
        }
    }
    // permute pairs: position perm[i] receives pair i, components likewise
    std::array<cplx, 3> a = act.params.a(), b = act.params.b();
    std::array<cplx, 3> ap, bp;
    Mat3 pm{};
    for (int i = 0; i < 3; ++i) {
        ap[g.perm[i]] = a[i];
        bp[g.perm[i]] = b[i];
        pm[g.perm[i]][i] = 1.0;
    }
    act.params = make_gdh(ap[0], ap[1], ap[2], bp[0], bp[1], bp[2], act.params.c);
    act.state_map = mat_mul(pm, act.state_map);
    return act;
}

struct OrbitMember {
    GroupElement element;
    std::optional<GdhParams> params;  // empty when the transform is undefined
};

inline std::vector<OrbitMember> enumerate_orbit(const GdhParams& p) {
    std::vector<OrbitMember> out;
    for (const auto& g : all_group_elements()) {
        OrbitMember m{g, std::nullopt};
        try {
            m.params = apply_group_element(g, p).params;
        } catch (const UndefinedTransform&) {
        }
        out.push_back(std::move(m));
    }
    return out;
}

inline std::array<double, 14> serialize_normalized(const GdhParams& p) {
    // scale c -> 1 using tau |-> lambda tau covariance
    std::array<cplx, 7> v{p.a1, p.a2, p.a3, p.b1, p.b2, p.b3, p.c};
    std::array<double, 14> out{};
    for (int i = 0; i < 7; ++i) {
        cplx z = v[i] / p.c;
        out[2 * i] = z.real();
        out[2 * i + 1] = z.imag();
    }
    return out;
}

struct CanonicalOrbit {
    std::vector<OrbitMember> members;
    GdhParams representative;
    GroupElement representative_element;
    size_t distinct_size{};
};

inline CanonicalOrbit canonical_orbit(const GdhParams& p, double tol = 1e-9) {
    CanonicalOrbit orb;
    orb.members = enumerate_orbit(p);
    auto less = [&](const std::array<double, 14>& a, const std::array<double, 14>& b) {
        for (int i = 0; i < 14; ++i) {
            if (a[i] < b[i] - tol) return true;
            if (a[i] > b[i] + tol) return false;
        }
        return false;
    };
    std::optional<std::array<double, 14>> best;
    std::vector<std::array<double, 14>> seen;
    for (const auto& m : orb.members) {
        if (!m.params) continue;
        auto key = serialize_normalized(*m.params);
        bool duplicate = false;
        for (const auto& s : seen)
            if (!less(s, key) && !less(key, s)) { duplicate = true; break; }
        if (!duplicate) seen.push_back(key);
        if (!best || less(key, *best)) {
            best = key;
            orb.representative = *m.params;
            orb.representative_element = m.element;
        }
    }
    orb.distinct_size = seen.size();
    return orb;
}

} // namespace gdh
