#pragma once

// Painleve-property classification of proper non-DH gDH systems: the row
// catalog, exponent computations, the integration-curve catalog, the explicit
// closed-form solution families, their first integrals, and the Chazy-class
// residual operators.

#include <optional>
#include <sstream>
#include <variant>

#include "gdh/integration.hpp"
#include "gdh/morphisms.hpp"

namespace gdh {

// ---- exponents -------------------------------------------------------------------

struct ExpVal {
    enum class Kind { finite, infinite, undefined } kind{Kind::finite};
    cplx v{};

    static ExpVal fin(cplx z) { return {Kind::finite, z}; }
    static ExpVal inf() { return {Kind::infinite, {}}; }
    static ExpVal undef() { return {Kind::undefined, {}}; }
    bool is_finite() const { return kind == Kind::finite; }

    bool close_to(const ExpVal& o, double tol = 1e-9) const {
        if (kind != o.kind) return false;
        return kind != Kind::finite || std::abs(v - o.v) <= tol;
    }
};

struct PpExponents {
    ExpVal n;                                     // 1/(nbar - 1)
    std::array<std::pair<ExpVal, ExpVal>, 3> r;   // -nbar (1/nu, 1/nu')
    std::array<std::pair<ExpVal, ExpVal>, 3> q;   // nbar ((nu-nu')/nu, (nu'-nu)/nu')
};

namespace detail {

inline ExpVal ratio_or_marker(cplx num, cplx den, double tol = 1e-12) {
    bool nz = std::abs(num) > tol, dz = std::abs(den) > tol;
    if (!dz) return nz ? ExpVal::inf() : ExpVal::undef();
    return ExpVal::fin(num / den);
}

} // namespace detail

inline PpExponents pp_exponents(const AltParams& v) {
    if (std::abs(v.nbar) < 1e-12)
        throw ImproperParameters("pp_exponents: nbar = 0");
    PpExponents out;
    out.n = detail::ratio_or_marker(1.0, v.nbar - 1.0);
    for (int i = 0; i < 3; ++i) {
        cplx nu = v.nu[i].first, nup = v.nu[i].second;
        out.r[i] = {detail::ratio_or_marker(-v.nbar, nu),
                    detail::ratio_or_marker(-v.nbar, nup)};
        out.q[i] = {detail::ratio_or_marker(v.nbar * (nu - nup), nu),
                    detail::ratio_or_marker(v.nbar * (nup - nu), nup)};
    }
    return out;
}

// ---- catalog rows ----------------------------------------------------------------

struct PpRowData {
    std::string label;
    std::optional<long> fam_n;  // family parameters where applicable
    std::optional<long> fam_q;
    std::optional<long> fam_r;
    bool n_infinite{};
    GdhParams gdh;
    AltParams alt;
    std::array<cplx, 3> angular{};
    std::array<std::pair<ExpVal, ExpVal>, 3> r_exponents;
    std::vector<std::pair<std::string, std::string>> preimages;  // (row label, map)
};

namespace detail {

using IPair = std::pair<long, long>;  // exact rational num/den

inline PpRowData make_row(std::string label, std::array<double, 7> abc,
                          std::array<IPair, 6> nu,
                          std::vector<std::pair<std::string, std::string>> pre = {}) {
    PpRowData row;
    row.label = std::move(label);
    row.gdh = make_gdh(abc[0], abc[1], abc[2], abc[3], abc[4], abc[5], abc[6]);
    row.alt.c = abc[6];
    cplx nusum = 0;
    for (int i = 0; i < 3; ++i) {
        cplx a(double(nu[2 * i].first) / nu[2 * i].second);
        cplx b(double(nu[2 * i + 1].first) / nu[2 * i + 1].second);
        row.alt.nu[i] = {a, b};
        nusum += a + b;
        row.angular[i] = b - a;
    }
    row.alt.nbar = (1.0 - nusum) / 2.0;
    for (int i = 0; i < 3; ++i)
        row.r_exponents[i] = {ratio_or_marker(-row.alt.nbar, row.alt.nu[i].first),
                              ratio_or_marker(-row.alt.nbar, row.alt.nu[i].second)};
    row.preimages = std::move(pre);
    return row;
}

inline std::string eiv_label(std::optional<long> n, long q, long r) {
    std::ostringstream os;
    os << "e.IV(" << (n ? std::to_string(*n) : std::string("inf")) << "," << q << ","
       << r << ")";
    return os.str();
}

} // namespace detail

// e.IV(n,q,r), n finite nonzero (not -1, -2) or infinite; q >= 1; r != 0
inline PpRowData eiv_row(std::optional<long> n, long q, long r) {
    PpRowData row;
    row.label = detail::eiv_label(n, q, r);
    row.fam_n = n;
    row.fam_q = q;
    row.fam_r = r;
    row.n_infinite = !n.has_value();
    double nb = n ? double(*n + 1) / double(*n) : 1.0;
    double qd = double(q), rd = double(r);
    row.alt.nbar = nb;
    row.alt.nu[0] = {-nb / rd, (qd - nb) / rd};
    row.alt.nu[1] = {-nb, 1.0 - nb};
    row.alt.nu[2] = {-(qd - nb) / rd, nb / rd};
    if (n) {
        double nd = double(*n);
        row.gdh = make_gdh(nd + 1, rd * (nd + 1), qd * nd - nd - 1, qd * nd - nd - 1,
                           -qd, nd + 1, qd * nd);
    } else {
        // n = infinity members as printed: q = 1 or 2
        if (q == 1)
            row.gdh = make_gdh(1, rd, 0, 0, 0, 1, 1);
        else if (q == 2)
            row.gdh = make_gdh(1, rd, 1, 1, 0, 1, 2);
        else
            throw UnknownEntry("e.IV(inf,q,r) rows exist for q = 1, 2 only");
    }
    row.alt.c = row.gdh.c;
    for (int i = 0; i < 3; ++i) {
        row.angular[i] = row.alt.nu[i].second - row.alt.nu[i].first;
        row.r_exponents[i] = {
            detail::ratio_or_marker(-row.alt.nbar, row.alt.nu[i].first),
            detail::ratio_or_marker(-row.alt.nbar, row.alt.nu[i].second)};
    }
    if (q == 1 && r != 1)
        row.preimages.push_back({detail::eiv_label(n, 1, 1), "eiv"});
    return row;
}

namespace detail {

inline PpRowData family_row(const std::string& base, long n) {
    double nd = double(n);
    auto L = [&](const char* b) { return std::string(b) + "(" + std::to_string(n) + ")"; };
    if (base == "e.I.1")
        return make_row(L("e.I.1"),
                        {-2, -3, -1, 2 * nd - 2, 3 * nd, nd - 4, 6 * nd},
                        {IPair{-1, 3 * n}, {-(n + 1), 3 * n}, {-1, 2 * n},
                         {-(n + 1), 2 * n}, {-1, 6 * n}, {-(n + 1), 6 * n}});
    if (base == "e.I.2")
        return make_row(L("e.I.2"),
                        {-1, -2, -1, nd - 2, 2 * nd, nd - 2, 4 * nd},
                        {IPair{-1, 4 * n}, {-(n + 1), 4 * n}, {-1, 2 * n},
                         {-(n + 1), 2 * n}, {-1, 4 * n}, {-(n + 1), 4 * n}});
    if (base == "e.II")
        return make_row(L("e.II"),
                        {-1, -1, -1, nd - 1, nd - 1, nd - 1, 3 * nd},
                        {IPair{-1, 3 * n}, {-(n + 1), 3 * n}, {-1, 3 * n},
                         {-(n + 1), 3 * n}, {-1, 3 * n}, {-(n + 1), 3 * n}},
                        {{L("e.II"), "3c"}});
    if (base == "e.IV.4") {
        PpRowData row = make_row(L("e.IV.4"),
                                 {-1, 0, -1, nd, -2, nd, 2 * nd},
                                 {IPair{-1, 2 * n}, {-(n + 1), 2 * n}, {0, 1}, {0, 1},
                                  {-1, 2 * n}, {-(n + 1), 2 * n}});
        row.preimages.push_back({"e.IV(" + std::to_string(n) + ",1,inf)", "2"});
        return row;
    }
    if (base == "e.IV(n,1,inf)")
        return make_row("e.IV(" + std::to_string(n) + ",1,inf)",
                        {0, -1, 0, -1, nd + 1, -1, nd},
                        {IPair{0, 1}, {0, 1}, {-1, n}, {-(n + 1), n}, {0, 1}, {0, 1}});
    throw UnknownEntry("unknown family " + base);
}

// the image rows e.IV.1(r), e.IV.2(r), e.IV.3(r)
inline PpRowData eiv_image_row(int which, long r) {
    double rd = double(r);
    std::string label = "e.IV." + std::to_string(which) + "(" + std::to_string(r) + ")";
    if (which == 1) {
        PpRowData row = make_row(label, {rd, 2, rd, -2, 4, -2, 2},
                                 {IPair{-1, 1}, {-1, 2}, {-2, r}, {2, r}, {-1, 1}, {-1, 2}});
        row.fam_r = r;
        row.preimages.push_back({eiv_label(1, 4, r), "2"});
        return row;
    }
    if (which == 2) {
        PpRowData row = make_row(label, {rd, 2, rd, -1, 3, -1, 2},
                                 {IPair{-3, 4}, {-1, 4}, {-3, 2 * r}, {3, 2 * r},
                                  {-3, 4}, {-1, 4}});
        row.fam_r = r;
        row.preimages.push_back({eiv_label(2, 3, r), "2"});
        return row;
    }
    if (which == 3) {
        PpRowData row = make_row(label, {rd, 2, rd, 0, 2, 0, 2},
                                 {IPair{-1, 2}, {0, 1}, {-1, r}, {1, r}, {-1, 2}, {0, 1}});
        row.fam_r = r;
        row.n_infinite = true;
        row.preimages.push_back({eiv_label(std::nullopt, 2, r), "2"});
        return row;
    }
    throw UnknownEntry("unknown e.IV image row");
}

} // namespace detail

// the finitely many printed rows (the n-parametrized and r-parametrized
// families are instantiated on demand)
inline const std::vector<PpRowData>& pp_fixed_rows() {
    static const std::vector<PpRowData> rows = [] {
        using detail::IPair;
        using detail::make_row;
        std::vector<PpRowData> v;
        auto add = [&](PpRowData r) { v.push_back(std::move(r)); };
        // n = 1
        add(make_row("n=1 I", {2, 2, 1, -1, -1, 2, 3},
                     {IPair{-2, 1}, {0, 1}, {-2, 1}, {0, 1}, {-1, 1}, {2, 1}}));
        add(make_row("n=1 I.1", {2, 4, 1, -3, 1, 2, 3},
                     {IPair{-1, 1}, {-1, 2}, {-2, 1}, {0, 1}, {-1, 2}, {1, 1}},
                     {{"n=1 I", "2"}}));
        add(make_row("n=1 II", {1, 1, 0, 0, 0, 0, 1},
                     {IPair{-2, 1}, {0, 1}, {-2, 1}, {0, 1}, {0, 1}, {1, 1}}));
        add(make_row("n=1 II.1", {1, 2, 0, -1, 1, 0, 1},
                     {IPair{-1, 1}, {-1, 2}, {-2, 1}, {0, 1}, {0, 1}, {1, 2}},
                     {{"n=1 II", "2"}}));
        add(make_row("n=1 III", {1, 1, 1, 0, -1, 1, 2},
                     {IPair{-2, 1}, {1, 1}, {-2, 1}, {0, 1}, {-2, 1}, {2, 1}}));
        add(make_row("n=1 IV", {2, 2, 1, 1, -1, 0, 3},
                     {IPair{-2, 1}, {1, 1}, {-2, 1}, {0, 1}, {-1, 1}, {1, 1}}));
        add(make_row("n=1 V", {1, 1, 1, 0, 0, 0, 2},
                     {IPair{-2, 1}, {1, 1}, {-2, 1}, {1, 1}, {-2, 1}, {1, 1}}));
        add(make_row("n=1 V.1", {1, 2, 1, -2, 2, 0, 2},
                     {IPair{-1, 1}, {-1, 2}, {-2, 1}, {1, 1}, {-1, 1}, {1, 2}},
                     {{"n=1 V", "2"}}));
        add(make_row("n=1 V.2", {3, 2, 3, -2, -2, 4, 2},
                     {IPair{-1, 1}, {-1, 2}, {-2, 3}, {-1, 3}, {-1, 1}, {1, 2}},
                     {{"n=1 V.1", "3"}, {"n=1 V.3", "2"}, {"n=1 V", "6c"}}));
        add(make_row("n=1 V.3", {1, 3, 1, -2, 4, -2, 2},
                     {IPair{-2, 3}, {-1, 3}, {-2, 1}, {1, 1}, {-2, 3}, {-1, 3}},
                     {{"n=1 V", "3c"}}));
        add(make_row("n=1 VI", {1, 2, 2, -2, 1, 1, 3},
                     {IPair{-1, 1}, {0, 1}, {-2, 1}, {1, 1}, {-2, 1}, {1, 1}}));
        add(make_row("n=1 VI.1", {2, 4, 1, -3, 5, -2, 3},
                     {IPair{-1, 1}, {-1, 2}, {-2, 1}, {1, 1}, {-1, 2}, {0, 1}},
                     {{"n=1 VI", "2"}}));
        add(make_row("n=1 VII.1", {1, 2, 1, -1, 0, 1, 2},
                     {IPair{-1, 1}, {0, 1}, {-2, 1}, {0, 1}, {-1, 1}, {1, 1}}));
        add(make_row("n=1 VII.2", {1, 3, 1, -2, 1, 1, 2},
                     {IPair{-2, 3}, {-1, 3}, {-2, 1}, {0, 1}, {-2, 3}, {2, 3}}));
        add(make_row("n=1 VIII.1", {2, 6, 1, -3, 3, 0, 3},
                     {IPair{-2, 3}, {-1, 3}, {-2, 1}, {0, 1}, {-1, 3}, {1, 3}}));
        add(make_row("n=1 X.1", {1, 4, 2, -2, 1, 1, 3},
                     {IPair{-1, 2}, {0, 1}, {-2, 1}, {0, 1}, {-1, 1}, {1, 2}}));
        add(make_row("n=1 XI.1", {2, 6, 1, -1, 3, -2, 3},
                     {IPair{-2, 3}, {0, 1}, {-2, 1}, {0, 1}, {-1, 3}, {0, 1}}));
        add(make_row("n=1 XII.1", {1, 4, 1, -2, 2, 0, 2},
                     {IPair{-1, 2}, {-1, 4}, {-2, 1}, {0, 1}, {-1, 2}, {1, 4}}));
        add(make_row("n=1 XIII.1", {1, 4, 1, -1, 2, -1, 2},
                     {IPair{-1, 2}, {0, 1}, {-2, 1}, {0, 1}, {-1, 2}, {0, 1}}));
        add(make_row("n=1 XIII.2", {6, 4, 3, -1, -1, 2, 1},
                     {IPair{-1, 1}, {-1, 2}, {-2, 3}, {-1, 3}, {-1, 2}, {0, 1}},
                     {{"n=1 XIII.1", "6"},
                      {"n=1 XIII.3", "3"},
                      {"n=1 XIII.4", "6c"},
                      {"n=1 XIII.5", "2"}}));
        add(make_row("n=1 XIII.3", {2, 2, 1, -1, 1, 0, 1},
                     {IPair{-1, 1}, {-1, 2}, {-1, 1}, {0, 1}, {-1, 2}, {0, 1}},
                     {{"n=1 XIII.1", "2"}, {"n=1 XIII.4", "2"}}));
        add(make_row("n=1 XIII.4", {1, 1, 1, 0, 0, 0, 1},
                     {IPair{-1, 1}, {0, 1}, {-1, 1}, {0, 1}, {-1, 1}, {0, 1}}));
        add(make_row("n=1 XIII.5", {2, 3, 2, -1, 2, -1, 1},
                     {IPair{-2, 3}, {-1, 3}, {-1, 1}, {0, 1}, {-2, 3}, {-1, 3}},
                     {{"n=1 XIII.4", "3c"}}));
        // n = 2
        add(make_row("n=2 I", {1, 1, 1, 0, 0, 1, 2},
                     {IPair{-3, 2}, {1, 2}, {-3, 2}, {1, 2}, {-3, 2}, {3, 2}}));
        add(make_row("n=2 I.1", {1, 2, 1, -1, 1, 1, 2},
                     {IPair{-3, 4}, {-1, 4}, {-3, 2}, {1, 2}, {-3, 4}, {3, 4}},
                     {{"n=2 I", "2"}}));
        add(make_row("n=2 II", {3, 3, 1, 1, 1, 0, 4},
                     {IPair{-3, 2}, {1, 2}, {-3, 2}, {1, 2}, {-1, 2}, {1, 2}}));
        add(make_row("n=2 II.1", {3, 6, 1, -2, 4, 0, 4},
                     {IPair{-3, 4}, {-1, 4}, {-3, 2}, {1, 2}, {-1, 4}, {1, 4}},
                     {{"n=2 II", "2"}}));
        add(make_row("n=2 III.1", {4, 6, 4, 3, -1, -1, 2},
                     {IPair{-1, 2}, {1, 6}, {-3, 4}, {-1, 4}, {-1, 2}, {-1, 6}}));
        add(make_row("n=2 III.2", {1, 3, 1, -1, 2, 0, 2},
                     {IPair{-1, 2}, {-1, 6}, {-3, 2}, {1, 2}, {-1, 2}, {1, 6}}));
        // n = 3
        add(make_row("n=3 I", {2, 2, 1, 1, 1, 0, 3},
                     {IPair{-4, 3}, {2, 3}, {-4, 3}, {2, 3}, {-2, 3}, {1, 3}}));
        add(make_row("n=3 I.1", {2, 4, 1, -1, 3, 0, 3},
                     {IPair{-2, 3}, {-1, 6}, {-4, 3}, {2, 3}, {-1, 3}, {1, 6}},
                     {{"n=3 I", "2"}}));
        // n = infinity
        add(make_row("e.I.1(inf)", {0, 0, 0, 2, 3, 1, 6},
                     {IPair{0, 1}, {-1, 3}, {0, 1}, {-1, 2}, {0, 1}, {-1, 6}}));
        add(make_row("e.I.2(inf)", {0, 0, 0, 1, 2, 1, 4},
                     {IPair{0, 1}, {-1, 4}, {0, 1}, {-1, 2}, {0, 1}, {-1, 4}}));
        add(make_row("e.II(inf)", {0, 0, 0, 1, 1, 1, 3},
                     {IPair{0, 1}, {-1, 3}, {0, 1}, {-1, 3}, {0, 1}, {-1, 3}},
                     {{"e.II(inf)", "3c"}}));
        add(make_row("e.IV.4(inf)", {0, 0, 0, 1, 0, 1, 2},
                     {IPair{0, 1}, {-1, 2}, {0, 1}, {0, 1}, {0, 1}, {-1, 2}},
                     {{"e.IV(inf,1,inf)", "2"}}));
        add(make_row("e.IV(inf,1,inf)", {0, 0, 0, 0, 1, 0, 1},
                     {IPair{0, 1}, {0, 1}, {0, 1}, {-1, 1}, {0, 1}, {0, 1}}));
        for (auto& row : v)
            if (row.label.find("inf") != std::string::npos) row.n_infinite = true;
        return v;
    }();
    return rows;
}

// ---- classification --------------------------------------------------------------

struct PpEntry {
    std::string label;
    std::optional<long> fam_n, fam_q, fam_r;
    GdhParams gdh;               // canonical row data
    AltParams alt;
    std::array<cplx, 3> angular{};
    std::array<std::pair<ExpVal, ExpVal>, 3> r_exponents;
    std::vector<std::pair<std::string, std::string>> preimages;
};

struct DhRule {
    std::array<cplx, 3> alpha{};
    std::array<std::optional<long>, 3> N{};  // empty = infinity (alpha = 0)
    bool has_pp{};
};

struct NoPP {};

using Classification = std::variant<PpEntry, DhRule, NoPP>;

namespace detail {

// canonical signature of the unordered nu data: pairs sorted internally and
// across, for tolerance-based multiset comparison
inline std::array<std::array<cplx, 2>, 3> nu_signature(const AltParams& v) {
    std::array<std::array<cplx, 2>, 3> s;
    for (int i = 0; i < 3; ++i) {
        cplx a = v.nu[i].first, b = v.nu[i].second;
        bool swap = (a.real() > b.real() + 1e-11) ||
                    (std::abs(a.real() - b.real()) <= 1e-11 && a.imag() > b.imag());
        s[i] = swap ? std::array<cplx, 2>{b, a} : std::array<cplx, 2>{a, b};
    }
    std::sort(s.begin(), s.end(), [](const auto& x, const auto& y) {
        for (int k = 0; k < 2; ++k) {
            if (x[k].real() < y[k].real() - 1e-11) return true;
            if (x[k].real() > y[k].real() + 1e-11) return false;
            if (x[k].imag() < y[k].imag() - 1e-11) return true;
            if (x[k].imag() > y[k].imag() + 1e-11) return false;
        }
        return false;
    });
    return s;
}

inline bool signature_match(const AltParams& a, const AltParams& b, double tol = 1e-9) {
    if (std::abs(a.nbar - b.nbar) > tol) return false;
    auto sa = nu_signature(a), sb = nu_signature(b);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 2; ++k)
            if (std::abs(sa[i][k] - sb[i][k]) > tol) return false;
    return true;
}

inline std::optional<long> near_integer(cplx z, double tol = 1e-9) {
    double r = std::round(z.real());
    if (std::abs(z - cplx(r, 0)) > tol || std::abs(r) > 1e15) return std::nullopt;
    return long(r);
}

inline PpEntry entry_from_row(const PpRowData& row) {
    PpEntry e;
    e.label = row.label;
    e.fam_n = row.fam_n;
    e.fam_q = row.fam_q;
    e.fam_r = row.fam_r;
    e.gdh = row.gdh;
    e.alt = row.alt;
    e.angular = row.angular;
    e.r_exponents = row.r_exponents;
    e.preimages = row.preimages;
    return e;
}

// PP condition for e.IV(n,q,r): q = 1 for any admissible n, the finite list
// otherwise, and for (5,2) only even r
inline bool eiv_has_pp(std::optional<long> n, long q, long r) {
    if (r == 0) return false;
    if (q == 1) return true;
    if (!n) return q == 2;
    static const std::vector<std::pair<long, long>> ok{{1, 2}, {1, 3}, {1, 4},
                                                       {2, 2}, {2, 3}, {3, 2}};
    for (auto [nn, qq] : ok)
        if (*n == nn && q == qq) return true;
    if (*n == 5 && q == 2) return r % 2 == 0;
    return false;
}

} // namespace detail

inline Classification classify_pp(const GdhParams& p, double tol = 1e-9) {
    auto rep = properness(p);
    if (!rep.is_proper) throw ImproperParameters("classify_pp: improper system");
    AltParams v = gdh_to_alt(p);

    // DH rule first: pairs symmetric with nbar = 1/2, up to the group action
    bool dh_like = std::abs(v.nbar - 0.5) <= tol;
    if (dh_like)
        for (int i = 0; i < 3; ++i)
            if (std::abs(v.nu[i].first + v.nu[i].second) > tol) dh_like = false;
    if (dh_like) {
        DhRule rule;
        rule.has_pp = true;
        for (int i = 0; i < 3; ++i) {
            cplx alpha = v.nu[i].second - v.nu[i].first;
            rule.alpha[i] = alpha;
            if (std::abs(alpha) <= tol) {
                rule.N[i] = std::nullopt;  // alpha = 0 <=> N = infinity
            } else {
                auto N = detail::near_integer(1.0 / alpha, tol);
                if (N && *N != 0)
                    rule.N[i] = N;
                else
                    rule.has_pp = false;
            }
        }
        return rule;
    }

    // non-DH: nbar must give an integer or infinite n
    std::optional<long> n;
    bool n_inf = std::abs(v.nbar - 1.0) <= tol;
    if (!n_inf) {
        n = detail::near_integer(1.0 / (v.nbar - 1.0), 1e-7);
        if (!n || *n == 0 || *n == -1 || *n == -2) return NoPP{};
    }

    std::vector<PpRowData> candidates;
    if (!n_inf) {
        for (const auto& row : pp_fixed_rows()) {
            if (row.n_infinite) continue;
            if (std::abs(row.alt.nbar - v.nbar) < tol) candidates.push_back(row);
        }
        for (const char* fam : {"e.I.1", "e.I.2", "e.II", "e.IV.4", "e.IV(n,1,inf)"})
            candidates.push_back(detail::family_row(fam, *n));
    } else {
        for (const auto& row : pp_fixed_rows())
            if (row.n_infinite) candidates.push_back(row);
    }
    for (const auto& row : candidates)
        if (detail::signature_match(row.alt, v, tol)) {
            auto e = detail::entry_from_row(row);
            return e;
        }

    // r-parametrized families: solve r from the target pairs, then confirm.
    // r and -r label group-equivalent systems (the fibres over 0 and infinity
    // trade places), so prefer the candidate whose normalized parameter
    // vector reproduces the input, then the positive sign.
    auto try_family = [&](const std::function<PpRowData(long)>& make,
                          std::vector<cplx> r_seeds) -> std::optional<PpRowData> {
        std::vector<PpRowData> hits;
        std::vector<long> seen;
        for (cplx seed : r_seeds) {
            auto r = detail::near_integer(seed, 1e-7);
            if (!r || *r == 0) continue;
            if (std::find(seen.begin(), seen.end(), *r) != seen.end()) continue;
            seen.push_back(*r);
            PpRowData row = make(*r);
            if (detail::signature_match(row.alt, v, tol)) hits.push_back(row);
        }
        if (hits.empty()) return std::nullopt;
        auto input_key = serialize_normalized(p);
        auto rank = [&](const PpRowData& row) {
            auto k = serialize_normalized(row.gdh);
            double d = 0;
            for (int i = 0; i < 14; ++i) d = std::max(d, std::abs(k[i] - input_key[i]));
            // exact parameter reproductions first, then positive r
            return (d < 1e-8 ? 0 : 2) + (row.fam_r.value_or(1) > 0 ? 0 : 1);
        };
        std::stable_sort(hits.begin(), hits.end(),
                         [&](const PpRowData& a, const PpRowData& b) {
                             return rank(a) < rank(b);
                         });
        return hits.front();
    };
    // collect candidate r values from every nonzero nu entry
    auto r_seeds_for = [&](cplx numerator) {
        std::vector<cplx> seeds;
        for (int i = 0; i < 3; ++i)
            for (cplx e : {v.nu[i].first, v.nu[i].second})
                if (std::abs(e) > tol) seeds.push_back(numerator / e);
        return seeds;
    };

    std::vector<std::pair<std::function<PpRowData(long)>, std::vector<cplx>>> fams;
    auto add_eiv = [&](std::optional<long> nn, long q) {
        double nb = nn ? double(*nn + 1) / double(*nn) : 1.0;
        fams.push_back({[nn, q](long r) { return eiv_row(nn, q, r); },
                        r_seeds_for(-nb)});
        fams.push_back({[nn, q](long r) { return eiv_row(nn, q, r); },
                        r_seeds_for(double(q) - nb)});
    };
    if (!n_inf) {
        add_eiv(*n, 1);
        if (*n == 1) {
            add_eiv(1, 2);
            add_eiv(1, 3);
            add_eiv(1, 4);
            fams.push_back({[](long r) { return detail::eiv_image_row(1, r); },
                            r_seeds_for(-2.0)});
        }
        if (*n == 2) {
            add_eiv(2, 2);
            add_eiv(2, 3);
            fams.push_back({[](long r) { return detail::eiv_image_row(2, r); },
                            r_seeds_for(-1.5)});
        }
        if (*n == 3) add_eiv(3, 2);
        if (*n == 5) add_eiv(5, 2);
    } else {
        add_eiv(std::nullopt, 1);
        add_eiv(std::nullopt, 2);
        fams.push_back({[](long r) { return detail::eiv_image_row(3, r); },
                        r_seeds_for(-1.0)});
    }
    for (auto& [make, seeds] : fams)
        if (auto row = try_family(make, seeds)) {
            if (row->fam_q &&
                !detail::eiv_has_pp(row->fam_n, *row->fam_q, row->fam_r.value_or(1)))
                return NoPP{};
            return detail::entry_from_row(*row);
        }
    return NoPP{};
}

// ---- preimage-edge verification ----------------------------------------------------

// find a row by label, instantiating families like "e.IV(1,4,3)" or "e.II(4)"
inline PpRowData pp_row_by_label(const std::string& label) {
    for (const auto& row : pp_fixed_rows())
        if (row.label == label) return row;
    auto parse_long = [](const std::string& s) -> std::optional<long> {
        if (s == "inf") return std::nullopt;
        return std::stol(s);
    };
    if (label.rfind("e.IV(", 0) == 0) {
        std::string body = label.substr(5, label.size() - 6);
        size_t c1 = body.find(','), c2 = body.find(',', c1 + 1);
        auto n = parse_long(body.substr(0, c1));
        long q = std::stol(body.substr(c1 + 1, c2 - c1 - 1));
        std::string rstr = body.substr(c2 + 1);
        if (rstr == "inf") {
            if (!n) {
                for (const auto& row : pp_fixed_rows())
                    if (row.label == "e.IV(inf,1,inf)") return row;
            }
            return detail::family_row("e.IV(n,1,inf)", *n);
        }
        return eiv_row(n, q, std::stol(rstr));
    }
    for (const char* fam : {"e.I.1", "e.I.2", "e.II", "e.IV.4"}) {
        std::string pre = std::string(fam) + "(";
        if (label.rfind(pre, 0) == 0) {
            std::string body = label.substr(pre.size(), label.size() - pre.size() - 1);
            if (body == "inf") break;  // already covered by the fixed rows
            return detail::family_row(fam, std::stol(body));
        }
    }
    for (int which : {1, 2, 3}) {
        std::string pre = "e.IV." + std::to_string(which) + "(";
        if (label.rfind(pre, 0) == 0) {
            std::string body = label.substr(pre.size(), label.size() - pre.size() - 1);
            return detail::eiv_image_row(which, std::stol(body));
        }
    }
    throw UnknownLabel("unknown catalog row: " + label);
}

// check that applying `map` to some group image of `pre` lands on the
// 48-orbit of `row` (nu signatures match after the push)
inline bool verify_preimage_edge(const PpRowData& row, const PpRowData& pre,
                                 const std::string& map, double tol = 1e-9) {
    if (map == "eiv") {
        // the cyclic e.IV(n,q,1) -> e.IV(n,q,r) morphism
        return verify_eiv_morphism(double(row.fam_n ? *row.fam_n : 1),
                                   double(*row.fam_q), int(*row.fam_r), 40) < 1e-8;
    }
    const MorphismSpec& spec = morphism_by_name(map);
    for (const auto& g : all_group_elements()) {
        GdhParams q;
        try {
            q = apply_group_element(g, pre.gdh).params;
        } catch (const UndefinedTransform&) {
            continue;
        }
        if (spec.rule.constraint_defect(q) > 1e-9) continue;
        GdhParams down = spec.rule.push(q);
        if (!is_proper(down)) continue;
        if (detail::signature_match(gdh_to_alt(down), row.alt, tol)) return true;
    }
    return false;
}

// row self-consistency (criterion data checks); returns failure notes
inline std::vector<std::string> pp_row_selfcheck(const PpRowData& row,
                                                 double tol = 1e-12) {
    std::vector<std::string> failures;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) failures.push_back(row.label + ": " + what);
    };
    expect(std::abs(row.alt.fuchs_defect()) < tol, "Fuchsian condition");
    AltParams computed = gdh_to_alt(row.gdh);
    expect(std::abs(computed.nbar - row.alt.nbar) < tol, "nbar mismatch");
    for (int i = 0; i < 3; ++i) {
        expect(std::abs(computed.nu[i].first - row.alt.nu[i].first) < tol &&
                   std::abs(computed.nu[i].second - row.alt.nu[i].second) < tol,
               "nu column mismatch");
        expect(std::abs(row.angular[i] -
                        (row.alt.nu[i].second - row.alt.nu[i].first)) < tol,
               "angular mismatch");
        auto want_r = detail::ratio_or_marker(-row.alt.nbar, row.alt.nu[i].first);
        auto want_rp = detail::ratio_or_marker(-row.alt.nbar, row.alt.nu[i].second);
        expect(row.r_exponents[i].first.close_to(want_r, 1e-10) &&
                   row.r_exponents[i].second.close_to(want_rp, 1e-10),
               "r exponent mismatch");
    }
    GdhParams back = alt_to_gdh(row.alt);
    expect(std::abs(back.a1 - row.gdh.a1) + std::abs(back.a2 - row.gdh.a2) +
                   std::abs(back.a3 - row.gdh.a3) + std::abs(back.b1 - row.gdh.b1) +
                   std::abs(back.b2 - row.gdh.b2) + std::abs(back.b3 - row.gdh.b3) <
               1e-10 * std::max(1.0, std::abs(row.gdh.c)),
           "alt_to_gdh round trip");
    return failures;
}

// ---- integration-curve catalog ------------------------------------------------------

struct CurveEntry {
    std::string label;
    std::string curve_type;
    std::function<cplx(cplx, cplx, cplx, cplx)> residual;  // (K1, K2, t_or_u, deriv)
};

inline bool curve_degenerate(cplx k1, cplx k2, double tol = 1e-13) {
    return std::abs(k1) < tol && std::abs(k2) < tol;
}

// the algebraic curves in (t, tdot) determining the base-system solutions,
// with t represented as u^r for the e.IV rows (curves given in (u, udot))
inline CurveEntry curve_by_label(const std::string& label) {
    auto entry = [&](std::string type, std::function<cplx(cplx, cplx, cplx, cplx)> f) {
        return CurveEntry{label, std::move(type), std::move(f)};
    };
    auto p2 = [](cplx z) { return z * z; };
    auto p3 = [](cplx z) { return z * z * z; };
    if (label == "n=1 I")
        return entry("elliptic", [p2](cplx k1, cplx k2, cplx t, cplx td) {
            return p2(td) - k1 * t * t * (2.0 * t - 3.0) - k2;
        });
    if (label == "n=1 II")
        return entry("rational", [p2](cplx k1, cplx k2, cplx t, cplx td) {
            return p2(td) - k1 * t * t + k2 * (2.0 * t - 1.0);
        });
    if (label == "n=1 III")
        return entry("elliptic", [p2, p3](cplx k1, cplx k2, cplx t, cplx td) {
            return p2(td) - k1 * p3(t) * (3.0 * t - 4.0) - k2;
        });
    if (label == "n=1 IV")
        return entry("elliptic", [p2, p3](cplx k1, cplx k2, cplx t, cplx td) {
            return p2(td) - k1 * p3(t) + k2 * (3.0 * t - 2.0);
        });
    if (label == "n=1 V")
        return entry("elliptic(j=0)", [p2, p3](cplx k1, cplx k2, cplx t, cplx td) {
            return p2(td) - k1 * p3(t) * (t - 2.0) - k2 * (2.0 * t - 1.0);
        });
    if (label == "n=1 VI")
        return entry("elliptic", [p2](cplx k1, cplx k2, cplx t, cplx td) {
            return p2(td) - k1 * t * t * (t * t - 3.0 * t + 3.0) + k2 * t;
        });
    if (label == "n=2 I")
        return entry("elliptic(j=0)", [p2, p3](cplx k1, cplx k2, cplx t, cplx td) {
            return p3(td) - p2(k1 * t * t * (2.0 * t - 3.0) + k2);
        });
    if (label == "n=2 II")
        return entry("elliptic(j=0)", [p2, p3](cplx k1, cplx k2, cplx t, cplx td) {
            return p3(td) - p2(k1 * t * t - k2 * (2.0 * t - 1.0));
        });
    if (label == "n=3 I")
        return entry("elliptic(j=1728)", [p3](cplx k1, cplx k2, cplx t, cplx td) {
            cplx f = k1 * t * t - k2 * (2.0 * t - 1.0);
            return td * td * td * td - p3(f);
        });
    if (label == "e.IV(5,2,r).reduced") {
        // the even-r elliptic reduction v = u^2 of the hyperelliptic
        // (n,q) = (5,2) curve: vdot^6 = 64 v^3 (K1 v - K2)^5
        return entry("elliptic(j=0)", [](cplx k1, cplx k2, cplx v, cplx vd) {
            cplx f = k1 * v - k2;
            return std::pow(vd, 6.0) - 64.0 * v * v * v * f * f * f * f * f;
        });
    }
    if (label.rfind("e.IV(", 0) == 0) {
        // udot^(n+1) = (K1 u^q - K2)^n, and udot = K1 u^q - K2 at n = infinity
        std::string body = label.substr(5, label.size() - 6);
        size_t c1 = body.find(','), c2 = body.find(',', c1 + 1);
        std::string nstr = body.substr(0, c1);
        long q = std::stol(body.substr(c1 + 1, c2 - c1 - 1));
        if (nstr == "inf")
            return entry("rational", [q](cplx k1, cplx k2, cplx u, cplx ud) {
                return ud - (k1 * std::pow(u, double(q)) - k2);
            });
        long n = std::stol(nstr);
        std::string type = (q == 1 || (n == 1 && q == 2)) ? "rational"
                           : (n == 5 && q == 2)           ? "hyperelliptic"
                           : ((n == 1 && q == 4) || (n == 3 && q == 2))
                               ? "elliptic(j=1728)"
                               : "elliptic(j=0)";
        return entry(type, [n, q](cplx k1, cplx k2, cplx u, cplx ud) {
            return std::pow(ud, double(n + 1)) -
                   std::pow(k1 * std::pow(u, double(q)) - k2, double(n));
        });
    }
    if (label == "e.IV(inf,1,inf)")
        return entry("transcendental", [](cplx k1, cplx k2, cplx t, cplx td) {
            return td - (k1 * t * std::log(t) + k2 * t);
        });
    throw UnknownEntry("no integration curve for " + label);
}

inline cplx curve_residual(const CurveEntry& e, cplx k1, cplx k2, cplx point,
                           cplx deriv) {
    return e.residual(k1, k2, point, deriv);
}

// ---- closed-form solution families ---------------------------------------------------

struct ClosedFormParams {
    std::array<cplx, 3> curve_point{cplx(1), cplx(0), cplx(0)};  // [c1:c2:c3]
    int sign{+1};          // branch of the square root in Ex2.general
    cplx C{};              // free additive constant
    long n{1};             // family index
    GdhParams ray_system{};
    std::string ray_direction{"e0"};
    cplx ray_scale{1.0};   // constant-solution scale for nilpotent rays
    cplx tau_star{};
};

struct ClosedFormSolution {
    std::string label;
    std::string kind;  // general | special | ray
    GdhParams system;
    std::function<std::pair<Vec3, Vec3>(cplx)> eval;  // x(tau) and xdot(tau)
};

namespace detail {

inline std::pair<Vec3, Vec3> from_jets(const std::array<Jet, 3>& xj) {
    Vec3 x, xd;
    for (int i = 0; i < 3; ++i) {
        x[i] = xj[i].d[0];
        xd[i] = xj[i].d[1];
    }
    return {x, xd};
}

// the t -> x map applied to a jet of t(tau); valid through first derivatives
inline std::array<Jet, 3> t_to_x_jets(const GseParams& g, cplx c, const Jet& t) {
    Jet td = jet_shift(t, 1), tdd = jet_shift(t, 2);
    cplx rho_inv = g.rho_inv();
    Jet common = tdd / td;
    for (int l = 0; l < 3; ++l) {
        if (g.points[l].inf) continue;
        common = common -
                 ((g.nu[l].first + g.nbar) / g.nbar) * (td / (t - g.points[l].v));
    }
    std::array<Jet, 3> xj;
    for (int i = 0; i < 3; ++i) {
        Jet extra(cplx(0));
        if (!g.points[i].inf)
            extra = (rho_inv / g.nbar) * (td / (t - g.points[i].v));
        xj[i] = (1.0 / c) * (common + extra);
    }
    return xj;
}

// jets of wp and wp' as functions of tau through an inner jet z(tau)
inline std::pair<Jet, Jet> wp_jets_through(const WeierstrassParams& w, const Jet& z) {
    auto [p, dp] = weierstrass_p(w, z.d[0]);
    cplx ddp = 6.0 * p * p - w.g2 / 2.0;
    cplx dddp = 12.0 * p * dp;
    cplx ddddp = 12.0 * (dp * dp + p * ddp);
    Jet pj = jet_compose({p, dp, ddp, dddp}, z);
    Jet pdj = jet_compose({dp, ddp, dddp, ddddp}, z);
    return {pj, pdj};
}

} // namespace detail

inline ClosedFormSolution closed_form(const std::string& label,
                                      const ClosedFormParams& params = {}) {
    ClosedFormSolution sol;
    sol.label = label;
    auto curve_check = [&](cplx defect, double scale) {
        if (std::abs(defect) > 1e-10 * std::max(1.0, scale))
            throw CurveConstraintViolated(label + ": parametrization point off the curve");
    };

    if (label == "Ex1.general") {
        auto [c1, c2, c3] = params.curve_point;
        curve_check(c1 * c1 - c2 * c2 - c3 * c3,
                    std::norm(c1) + std::norm(c2) + std::norm(c3));
        sol.kind = "general";
        sol.system = make_gdh(1, 1, 0, 0, 0, 0, 1);
        sol.eval = [c1, c2, c3](cplx tau) {
            Jet s = jet_sin(Jet::var(tau)), co = jet_cos(Jet::var(tau));
            std::array<Jet, 3> xj{
                (Jet(-c2) - (c1 + c3) * s) / ((Jet(c1 + c3) + c2 * s) * co),
                (Jet(-c2) - (c1 - c3) * s) / ((Jet(c1 - c3) + c2 * s) * co),
                -(s / co)};
            return detail::from_jets(xj);
        };
        return sol;
    }
    if (label == "Ex1.special1" || label == "Ex1.special2" || label == "Ex1.special3") {
        sol.kind = "special";
        sol.system = make_gdh(1, 1, 0, 0, 0, 0, 1);
        if (label == "Ex1.special1")
            sol.eval = [](cplx tau) {
                Jet e = jet_exp(Jet::var(tau));
                std::array<Jet, 3> xj{Jet(cplx(0)), Jet(cplx(1)) / (Jet(cplx(1)) - e),
                                      Jet(cplx(1))};
                return detail::from_jets(xj);
            };
        else if (label == "Ex1.special2")
            sol.eval = [](cplx tau) {
                Jet e = jet_exp(Jet::var(tau));
                std::array<Jet, 3> xj{Jet(cplx(1)) / (Jet(cplx(1)) + e), Jet(cplx(0)),
                                      Jet(cplx(1))};
                return detail::from_jets(xj);
            };
        else
            sol.eval = [](cplx tau) {
                Jet t = Jet::var(tau);
                Jet t2 = t * t;
                std::array<Jet, 3> xj{
                    (Jet(cplx(1)) + 2.0 * t2) / (t * (Jet(cplx(1)) - 2.0 * t2)),
                    (Jet(cplx(1)) - 2.0 * t2) / (t * (Jet(cplx(1)) + 2.0 * t2)),
                    Jet(cplx(1)) / t};
                return detail::from_jets(xj);
            };
        return sol;
    }

    const cplx omega = std::polar(1.0, 2.0 * M_PI / 3.0);
    if (label == "Ex2.general") {
        auto [c1, c2, c3] = params.curve_point;
        curve_check(c1 * c1 * c1 - c2 * c2 * c2 - (4.0 / 27.0) * (c3 * c3 * c3),
                    std::pow(std::abs(c1) + std::abs(c2) + std::abs(c3), 3.0));
        sol.kind = "general";
        sol.system = make_gdh(1, 1, 1, 0, 0, 0, 2);
        // Weierstrass parametrization of tdot^2 = P t^4 - 2Q t^3 + 2P t - Q,
        // (Q, P) = (c1, c2)/c3, expanded about t = 0; the quartic's invariants
        // are g2 = 0 and g3 = (Q^3 - P^3)/4 = 1/27 on the curve
        cplx root = 2.0 * std::sqrt(-c1 * c3 * c3 * c3) * double(params.sign);
        sol.eval = [c1, c2, c3, root, omega](cplx tau) {
            WeierstrassParams w{0.0, 1.0 / 27.0};
            auto [pj, pdj] = detail::wp_jets_through(w, Jet::var(tau));
            Jet num = root * pdj + 2.0 * c2 * c3 * pj + Jet(c1 * c1);
            Jet den = 4.0 * c3 * c3 * (pj * pj) + Jet(c1 * c2);
            Jet t = num / den;
            Jet td = jet_shift(t, 1), tdd = jet_shift(t, 2);
            std::array<Jet, 3> xj;
            for (int i = 0; i < 3; ++i) {
                cplx ti = std::pow(omega, double(i));
                xj[i] = tdd / (2.0 * td) - td / (t - ti);
            }
            return detail::from_jets(xj);
        };
        return sol;
    }
    if (label == "Ex2.special1" || label == "Ex2.special2" || label == "Ex2.special3") {
        sol.kind = "special";
        sol.system = make_gdh(1, 1, 1, 0, 0, 0, 2);
        int shift = label.back() - '1';  // cyclic permutation of the components
        sol.eval = [shift](cplx tau) {
            Jet t = Jet::var(tau);
            Jet t2 = t * t;
            std::array<Jet, 3> base{
                Jet(cplx(1)) / (2.0 * t),
                (Jet(cplx(1)) - 3.0 * t2) / (2.0 * t * (Jet(cplx(1)) + t2)),
                (Jet(cplx(1)) + 3.0 * t2) / (2.0 * t * (Jet(cplx(1)) - t2))};
            std::array<Jet, 3> xj;
            for (int i = 0; i < 3; ++i) xj[(i + shift) % 3] = base[i];
            return detail::from_jets(xj);
        };
        return sol;
    }

    if (label == "Ex4.general") {
        sol.kind = "general";
        sol.system = make_gdh(0, 0, 0, 0, 1, 0, 1);
        cplx cbar = params.C;
        sol.eval = [cbar](cplx tau) {
            Jet e = jet_exp(Jet::var(tau));
            Jet E = cbar * jet_exp(e);  // Cbar exp(e^tau)
            Jet one(cplx(1));
            std::array<Jet, 3> xj{(one + e - E) / (one - E), one,
                                  (one - (one - e) * E) / (one - E)};
            return detail::from_jets(xj);
        };
        return sol;
    }
    if (label == "Ex4.special3") {
        sol.kind = "special";
        sol.system = make_gdh(0, 0, 0, 0, 1, 0, 1);
        sol.eval = [](cplx tau) {
            Jet e = jet_exp(Jet::var(tau));
            Jet one(cplx(1));
            std::array<Jet, 3> xj{one / (one - e), Jet(cplx(0)), e / (one - e)};
            return detail::from_jets(xj);
        };
        return sol;
    }

    // pseudo-Euclidean families: t = psi(C + tau^(n+1)) with psi from the
    // family's first-order curve, then the t -> x map
    auto family_solution = [&](const std::string& base) {
        long n = params.n;
        PpRowData row = detail::family_row(base, n);
        sol.kind = "general";
        sol.system = row.gdh;
        GseParams g = gse_from_alt(row.alt);
        cplx C = params.C;
        cplx c = row.gdh.c;
        std::function<Jet(const Jet&)> psi;
        if (base == "e.II") {
            // psi = sm^3(sigma/3), sm = 6 wp/(1 - 3 wp'), (g2,g3) = (0, 1/27)
            psi = [](const Jet& sigma) {
                WeierstrassParams w{0.0, 1.0 / 27.0};
                auto [pj, pdj] = detail::wp_jets_through(w, (1.0 / 3.0) * sigma);
                Jet sm = 6.0 * pj / (Jet(cplx(1)) - 3.0 * pdj);
                return sm * sm * sm;
            };
        } else if (base == "e.I.1") {
            // psi = 4 wp^3/g3 with g3 = 1/11664
            psi = [](const Jet& sigma) {
                WeierstrassParams w{0.0, 1.0 / 11664.0};
                auto [pj, pdj] = detail::wp_jets_through(w, sigma);
                return 46656.0 * (pj * pj * pj);
            };
        } else if (base == "e.I.2") {
            // psi = wp(sigma/4; 4, 0)^(-2)
            psi = [](const Jet& sigma) {
                WeierstrassParams w{4.0, 0.0};
                auto [pj, pdj] = detail::wp_jets_through(w, 0.25 * sigma);
                return Jet(cplx(1)) / (pj * pj);
            };
        } else {  // e.IV(n,1,inf)
            psi = [](const Jet& sigma) { return jet_exp(sigma); };
        }
        sol.eval = [g, c, C, n, psi](cplx tau) {
            Jet sigma = Jet(C) + jet_ipow(Jet::var(tau), int(n + 1));
            Jet t = psi(sigma);
            return detail::from_jets(detail::t_to_x_jets(g, c, t));
        };
        return sol;
    };
    if (label == "e.II.general") return family_solution("e.II");
    if (label == "e.I.1.general") return family_solution("e.I.1");
    if (label == "e.I.2.general") return family_solution("e.I.2");
    if (label == "e.IV(n,1,inf).general") return family_solution("e.IV(n,1,inf)");

    if (label == "rays") {
        GdhParams p = params.ray_system;
        auto elements = find_idempotents_nilpotents(p);
        for (const auto& el : elements) {
            if (el.name != params.ray_direction) continue;
            sol.kind = "ray";
            sol.system = p;
            cplx ts = params.tau_star;
            if (el.kind == ElementKind::idempotent) {
                Vec3 q = el.coords;
                sol.eval = [q, ts](cplx tau) {
                    cplx s = -1.0 / (tau - ts);
                    return std::pair<Vec3, Vec3>{s * q, (s * s) * q};
                };
            } else if (el.kind == ElementKind::nilpotent) {
                Vec3 q = params.ray_scale * el.direction;
                sol.eval = [q](cplx) { return std::pair<Vec3, Vec3>{q, Vec3{}}; };
            } else {
                throw UnknownLabel("degenerate ray direction " + params.ray_direction);
            }
            return sol;
        }
        throw UnknownLabel("unknown ray direction " + params.ray_direction);
    }
    throw UnknownLabel("unknown closed form " + label);
}

// ---- first integrals -------------------------------------------------------------------

// catalog integrals; n and q parametrize the Ex3 family
inline std::vector<cplx> first_integral_eval(const std::string& label, const Vec3& x,
                                             double n = 1, double q = 2) {
    cplx x1 = x[0], x2 = x[1], x3 = x[2];
    auto guard = [&](cplx denom) {
        if (std::abs(denom) < 1e-13 * std::max(1.0, norm_inf(x)))
            throw SingularPoint(label + ": integral denominator vanishes");
    };
    if (label == "Ex1") {
        guard(x1 - x2);
        return {x3 * x3 - x1 * x2, x1 * (x2 - x3) * (x2 - x3) / (x1 - x2),
                x2 * (x3 - x1) * (x3 - x1) / (x1 - x2)};
    }
    if (label == "Ex2") {
        std::array<cplx, 3> P;
        cplx cross = x1 * x2 + x2 * x3 + x3 * x1;
        for (int i = 0; i < 3; ++i) P[i] = 3.0 * x[i] * x[i] - cross;
        std::vector<cplx> out;
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            guard((x[j] - x[k]) * P[i]);
            cplx d = x[i] - x[j];
            out.push_back(d * d * d * P[k] /
                          ((x[j] - x[k]) * (x[j] - x[k]) * (x[j] - x[k]) * P[i]));
        }
        out.push_back(P[0] * P[1] * P[2]);
        return out;
    }
    if (label == "Ex3") {
        guard(x3 * std::pow(x1 - x2, q));
        cplx i1 = std::pow(x1, (q - 1.0) * n - 1.0) * std::pow(x3, n + 1.0) *
                  std::pow(x3 - x1, q);
        cplx i2 = x1 * std::pow(x3 - x2, q) / (x3 * std::pow(x1 - x2, q));
        return {i1, i2};
    }
    if (label == "Ex4") {
        guard(x1 - x2);
        return {x2 * std::log((x3 - x2) / (x1 - x2)) + (x3 - x1), x2};
    }
    if (label == "improper") {
        std::vector<cplx> out;
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            guard(x[k] - x[i]);
            out.push_back((x[i] - x[j]) / (x[k] - x[i]));
        }
        return out;
    }
    if (label == "S3") {
        // the symmetric gDH(a;b;c) with c - a - b = 0
        std::vector<cplx> out;
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            guard(x[j] * (x[k] - x[i]));
            out.push_back(x[i] * (x[j] - x[k]) / (x[j] * (x[k] - x[i])));
        }
        return out;
    }
    throw UnknownLabel("no first integrals for " + label);
}

// ---- Chazy-class residuals ----------------------------------------------------------------

// udddot - A u uddot - B udot^2 - C u^2 udot - D u^4 at a jet of u(tau)
inline cplx chazy_residual(cplx A, cplx B, cplx C, cplx D, const Jet& u) {
    cplx u0 = u.d[0], u1 = u.d[1], u2 = u.d[2], u3 = u.d[3];
    return u3 - A * u0 * u2 - B * u1 * u1 - C * u0 * u0 * u1 - D * u0 * u0 * u0 * u0;
}

// Chazy-XI(N) coefficients (A, B, C, D), lambda scaling u
inline std::array<cplx, 4> chazy_xi_coefficients(double N, cplx lambda) {
    cplx n2 = N * N - 1.0;
    return {lambda * n2, lambda * (N * N - 13.0), 12.0 * lambda * lambda * n2,
            -3.0 * lambda * lambda * lambda * n2 * n2};
}

// jet of the component average u = (x1+x2+x3)/3 along the flow, from the
// state alone via the algebra product
inline Jet chazy_mean_jet(const GdhParams& p, const Vec3& x) {
    Vec3 xd = eval_gdh_rhs(p, x);
    Vec3 xdd = 2.0 * algebra_product(p, x, xd);
    Vec3 xddd = 2.0 * (algebra_product(p, xd, xd) + algebra_product(p, x, xdd));
    auto mean = [](const Vec3& v) { return (v[0] + v[1] + v[2]) / 3.0; };
    return Jet(mean(x), mean(xd), mean(xdd), mean(xddd));
}

} // namespace gdh
