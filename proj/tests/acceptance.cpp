// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Every tolerance is pinned in code.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gdh/integration.hpp"
#include "gdh/morphisms.hpp"
#include "gdh/painleve.hpp"

using namespace gdh;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("criterion %2d (%s): %s%s%s\n", id, name.c_str(),
                pass ? "PASS" : "FAIL", detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!pass) ++g_failures;
}

GdhParams random_proper(Rng& rng) {
    for (;;) {
        GdhParams p;
        p.a1 = rng.box();
        p.a2 = rng.box();
        p.a3 = rng.box();
        p.b1 = rng.box();
        p.b2 = rng.box();
        p.b3 = rng.box();
        p.c = rng.box() + cplx(1.5, 0);
        auto rep = properness(p);
        if (rep.is_proper && std::abs(rep.rho_inv) > 0.05 && std::abs(rep.nbar) > 0.05)
            return p;
    }
}

GdhParams constrained_upstream(const std::string& name, Rng& rng) {
    cplx c = rng.box() + cplx(2.0, 0);
    cplx a1 = rng.box(), b1 = rng.box(), a2 = rng.box(), b2 = rng.box();
    if (name == "2") return make_gdh(a1, a2, a1, b1, b2, b1, c);
    if (name == "3") return make_gdh(a1, 3.0 * a1 - c, 2.0 * a1, b1, 3.0 * b1 - c, c - b1, c);
    if (name == "4")
        return make_gdh(a1, (4.0 * a1 - c) / 2.0, 3.0 * a1, b1, (4.0 * b1 - c) / 2.0, c - b1, c);
    if (name == "6") return make_gdh(a1, a1, 4.0 * a1, b1, b1, (3.0 * c - 2.0 * b1) / 4.0, c);
    if (name == "6c" || name == "3c") return make_gdh(a1, a1, a1, b1, b1, b1, c);
    if (name == "4bq") return make_gdh(a1, a1, 2.0 * a1, b1, b1, c / 2.0, c);
    if (name == "12bq") return make_gdh(-c / 4.0, -c / 4.0, -c / 2.0, c / 2.0, c / 2.0, c / 2.0, c);
    if (name == "12c") return make_gdh(-c / 6.0, -c / 6.0, -c / 6.0, c / 2.0, c / 2.0, c / 2.0, c);
    if (name == "10")
        return make_gdh(-3.0 * c / 5.0, -7.0 * c / 5.0, -6.0 * c / 5.0, c / 2.0, c / 2.0, c / 2.0, c);
    return make_gdh(-c / 4.0, -c / 4.0, -c / 4.0, c / 2.0, c / 2.0, c / 2.0, c);
}

cplx oracle_2f1(cplx a, cplx b, cplx c, cplx t) {
    cplx sum = 0, term = 1;
    for (int n = 0; n < 3000; ++n) {
        sum += term;
        cplx dn = double(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * t;
        if (std::abs(term) < 1e-20) break;
    }
    return sum;
}

void criterion1() {
    auto failures = catalog_selfcheck();
    bool pass = failures.empty();
    // Sigma1 coefficient sums equal the map degrees on the classical rows
    for (const auto& name : {"2", "3", "4", "6", "6c", "3c", "4bq"}) {
        const auto& sig = sigma_catalog().at(name);
        ExtRational sum(0);
        for (const auto& [m, cf] : sig.sigma1.terms()) sum += cf;
        if (!(sum == ExtRational(Rational(covering_by_name(name).degree)))) pass = false;
    }
    report(1, "exact catalog identities", pass,
           pass ? "P1+P2+P3 = 0 (11 maps), Sigma2^3+Sigma3^2+Sigma6 = 0 (7 rows), "
                  "Sigma1 sums = degrees, all in exact arithmetic"
                : failures.empty() ? "Sigma1 coefficient sums" : failures.front());
}

void criterion2() {
    Rng rng(20001);
    double worst = 0, fuchs = 0;
    for (int i = 0; i < 1000; ++i) {
        GdhParams p = random_proper(rng);
        AltParams v = gdh_to_alt(p);
        fuchs = std::max(fuchs, std::abs(v.fuchs_defect()));
        GdhParams q = alt_to_gdh(v);
        worst = std::max({worst, std::abs(q.a1 - p.a1), std::abs(q.a2 - p.a2),
                          std::abs(q.a3 - p.a3), std::abs(q.b1 - p.b1),
                          std::abs(q.b2 - p.b2), std::abs(q.b3 - p.b3)});
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "max error %.2e, Fuchs defect %.2e", worst, fuchs);
    report(2, "parameter round trip x1000", worst <= 1e-12 && fuchs <= 1e-12, buf);
}

void criterion3() {
    Rng rng(20003);
    double worst = 0;
    std::string worst_row;
    bool pass = true;
    for (const auto& name : morphism_names()) {
        GdhParams up = constrained_upstream(name, rng);
        double res = verify_solution_preserving(morphism_by_name(name), up, 100,
                                                777 + name.size());
        if (res > worst) {
            worst = res;
            worst_row = name;
        }
        if (res > 1e-9) pass = false;
    }
    double neg = verify_solution_preserving(
        morphism_by_name("2"), make_gdh(1, 1, 1.1, 0, 0, 0, 2), 50, 99, false);
    if (neg <= 1e-3) pass = false;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "worst residual %.2e (row %s), violated-constraint control %.2e",
                  worst, worst_row.c_str(), neg);
    report(3, "determining equations, all 11 rows", pass, buf);
}

void criterion4() {
    Rng rng(20004);
    double worst = 0;
    for (const auto& name : {"2", "3", "3c", "6c"}) {
        const auto& spec = morphism_by_name(name);
        GdhParams up = constrained_upstream(name, rng);
        GdhParams down = morphism_params(spec, up);
        Vec3 x0{cplx(0.32, 0.11), cplx(-0.27, -0.05), cplx(0.08, 0.21)};
        std::vector<cplx> taus;
        for (int i = 0; i <= 25; ++i)
            taus.push_back(0.5 * double(i) / 25.0 * std::polar(1.0, 0.4));
        IntegratorConfig cfg;
        cfg.rel_tol = cfg.abs_tol = 1e-12;
        auto ups = integrate_at([&](const Vec3& x) { return eval_gdh_rhs(up, x); }, x0,
                                taus, cfg);
        auto downs = integrate_at([&](const Vec3& x) { return eval_gdh_rhs(down, x); },
                                  apply_morphism(spec, x0), taus, cfg);
        for (size_t i = 0; i < taus.size(); ++i)
            worst = std::max(worst, norm_inf(apply_morphism(spec, ups[i]) - downs[i]));
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "sup deviation %.2e over arc 0.5", worst);
    report(4, "dynamic morphism transport (2, 3, 3c, 6c)", worst <= 1e-6, buf);
}

std::vector<cplx> arc_samples(cplx center, double radius, double a0, double a1, int n) {
    std::vector<cplx> out;
    for (int i = 0; i <= n; ++i)
        out.push_back(center + std::polar(radius, a0 + (a1 - a0) * i / n));
    return out;
}

void criterion5() {
    double worst_dh = 0, worst_v = 0;
    {
        IntegrationSetup setup;
        std::array<cplx, 3> alpha{cplx(0), cplx(1.0 / 3), cplx(0.5)};
        setup.nbar = 0.5;
        setup.c = 2.0;
        setup.psym.points = {ExtC(cplx(0)), ExtC(cplx(1)), ExtC::infinity()};
        for (int i = 0; i < 3; ++i) {
            cplx shift = (2.0 * setup.kappa[i] - 1.0) * setup.nbar;
            setup.psym.mu[i] = {-alpha[i] / 2.0 - shift, alpha[i] / 2.0 - shift};
        }
        setup.basis = IntegrationSetup::Basis::frobenius_pair;
        setup.basis_point = 1;
        setup.K1 = cplx(1.0, 0.2);
        setup.K2 = cplx(0.4, -0.3);
        GdhParams p = parametric_system(setup);
        for (const auto& s :
             parametric_integrate(setup, arc_samples(cplx(0.5, 0.0), 0.8, 0.6, 2.2, 29)))
            worst_dh = std::max(worst_dh, norm_inf(s.dx_dtau - eval_gdh_rhs(p, s.x)));
    }
    {
        IntegrationSetup setup;
        setup.nbar = 2.0;
        setup.c = 2.0;
        setup.psym.points = {ExtC(cplx(0)), ExtC(cplx(1)), ExtC::infinity()};
        for (int i = 0; i < 3; ++i) {
            cplx shift = (2.0 * setup.kappa[i] - 1.0) * setup.nbar;
            setup.psym.mu[i] = {cplx(-2) - shift, cplx(1) - shift};
        }
        setup.basis = IntegrationSetup::Basis::frobenius_cross;
        setup.basis_point = 0;
        setup.basis_point2 = 1;
        setup.K1 = cplx(0.9, 0.1);
        setup.K2 = cplx(0.5, 0.4);
        GdhParams p = parametric_system(setup);
        for (const auto& s :
             parametric_integrate(setup, arc_samples(cplx(0.5, 0.0), 0.9, 0.5, 2.0, 29)))
            worst_v = std::max(worst_v, norm_inf(s.dx_dtau - eval_gdh_rhs(p, s.x)));
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "DH(0,1/3,1/2|2) %.2e, row V %.2e at 30 samples",
                  worst_dh, worst_v);
    report(5, "Papperitz-based parametric integration", worst_dh <= 1e-7 && worst_v <= 1e-7,
           buf);
}

void criterion6() {
    Rng rng(20006);
    const std::array<ExtC, 3> pts{ExtC(cplx(0)), ExtC(cplx(1)), ExtC::infinity()};
    double worst_rt = 0;
    for (int rep = 0; rep < 50; ++rep) {
        GseParams g;
        g.points = pts;
        cplx sum = 0;
        g.nbar = rng.box() + cplx(1.5, 0);
        for (int i = 0; i < 3; ++i) {
            g.nu[i].first = rng.box();
            if (i < 2) {
                g.nu[i].second = rng.box();
                sum += g.nu[i].first + g.nu[i].second;
            }
        }
        g.nu[2].second = 1.0 - 2.0 * g.nbar - sum - g.nu[2].first;
        if (std::abs(g.rho_inv()) < 0.1) continue;
        cplx c = rng.box() + cplx(2.0, 0);
        cplx t = rng.box() + cplx(0.0, 1.5), td = rng.box() + cplx(1.2, 0), tdd = rng.box();
        Vec3 x = t_to_x(g, c, t, td, tdd);
        ExtC t2 = x_to_t(g.points, x);
        worst_rt = std::max(worst_rt, std::abs(t2.v - t));
        worst_rt = std::max(worst_rt, std::abs(tdot_from_x(g, c, x) - td));
    }
    // gse residual along a numerically integrated row-V trajectory
    GdhParams p = make_gdh(1, 1, 1, 0, 0, 0, 2);
    GseParams g = gse_from_alt(gdh_to_alt(p));
    Vec3 x0{cplx(0.31, 0.12), cplx(-0.22, 0.05), cplx(0.05, -0.31)};
    auto rhs = [&](const Vec3& x) { return eval_gdh_rhs(p, x); };
    auto x_at = [&](cplx tau) -> Vec3 {
        if (std::abs(tau) < 1e-15) return x0;
        IntegratorConfig cfg;
        cfg.rel_tol = cfg.abs_tol = 1e-13;
        return integrate_at(rhs, x0, {0.0, tau}, cfg).back();
    };
    double worst_gse = 0;
    for (int i = 0; i < 8; ++i) {
        cplx tau = 0.25 * rng.box();
        Jet t = t_jet_from_trajectory(g, p.c, x_at, tau);
        worst_gse = std::max(worst_gse, std::abs(gse_residual(g, t)));
    }
    // DH specialization equals the Schwarzian triangle equation
    double worst_se = 0;
    for (int rep = 0; rep < 50; ++rep) {
        std::array<cplx, 3> alpha{rng.box(), rng.box(), rng.box()};
        GseParams gd;
        gd.points = pts;
        gd.nbar = 0.5;
        for (int i = 0; i < 3; ++i) gd.nu[i] = {-alpha[i] / 2.0, alpha[i] / 2.0};
        Jet t(rng.box() + cplx(0.3, 1.2), rng.box() + cplx(1.0, 0), rng.box(), rng.box());
        worst_se = std::max(worst_se,
                            std::abs(gse_residual(gd, t) + se_residual(pts, alpha, t)));
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "round trip %.2e, row-V gse %.2e, DH vs SE %.2e",
                  worst_rt, worst_gse, worst_se);
    report(6, "gDH <-> gSE correspondence", 
           worst_rt <= 1e-10 && worst_gse <= 1e-7 && worst_se <= 1e-11, buf);
}

void criterion7() {
    Rng rng(20007);
    double worst_inv = 0;
    for (int rep = 0; rep < 20; ++rep) {
        GdhParams p = random_proper(rng);
        for (int i = 0; i < 3; ++i) {
            GdhParams q = apply_group_element(GroupElement::flip(i), p).params;
            GdhParams r = apply_group_element(GroupElement::flip(i), q).params;
            worst_inv = std::max({worst_inv, std::abs(r.a1 - p.a1), std::abs(r.a2 - p.a2),
                                  std::abs(r.a3 - p.a3), std::abs(r.b1 - p.b1),
                                  std::abs(r.b2 - p.b2), std::abs(r.b3 - p.b3)});
        }
    }
    GroupElement all_flips;
    all_flips.signs = {true, true, true};
    GdhParams nahm = apply_group_element(all_flips, make_gdh(1, 1, 1, 0, 0, 0, 1)).params;
    double nahm_dev = std::abs(nahm.a1) + std::abs(nahm.a2) + std::abs(nahm.a3) +
                      std::abs(nahm.b1) + std::abs(nahm.b2) + std::abs(nahm.b3) +
                      std::abs(nahm.c - 1.0);
    GdhParams p = random_proper(rng);
    Vec3 x0{cplx(0.25, 0.1), cplx(-0.3, 0.02), cplx(0.12, -0.2)};
    IntegratorConfig cfg;
    cfg.max_step = 0.01;
    Trajectory tr = integrate_trajectory([&](const Vec3& x) { return eval_gdh_rhs(p, x); },
                                         x0, {0.0, cplx(0.35, 0.2)}, cfg);
    double worst_tr = 0;
    for (int i = 0; i < 3; ++i) {
        auto act = apply_group_element(GroupElement::flip(i), p);
        Trajectory mapped;
        mapped.tau = tr.tau;
        for (const auto& x : tr.states) mapped.states.push_back(mat_vec(act.state_map, x));
        worst_tr = std::max(worst_tr,
                            residual_along([&](const Vec3& y) { return eval_gdh_rhs(act.params, y); },
                                           mapped));
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "involutions %.2e, Nahm image dev %.2e, transport %.2e",
                  worst_inv, nahm_dev, worst_tr);
    report(7, "order-48 group action", 
           worst_inv <= 1e-12 && nahm_dev <= 1e-12 && worst_tr <= 1e-8, buf);
}

void criterion8() {
    auto sorted = [](std::array<cplx, 3> v) {
        sort_canonical(v);
        return v;
    };
    double worst = 0;
    {
        GdhParams p = dh_standard({cplx(0), cplx(0), cplx(0)}, cplx(1.7, 0.2));
        auto r = kovalevskaya_exponents(p, find_idempotents_nilpotents(p)[0]);
        for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(r[i] + 1.0));
    }
    {
        GdhParams p = make_gdh(1, 1, 0, 0, 0, 0, 1);
        auto r = kovalevskaya_exponents(p, find_idempotents_nilpotents(p)[0]);
        auto want = sorted({-1.0, 2.0, 2.0});
        for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(r[i] - want[i]));
    }
    {
        std::array<cplx, 3> alpha{cplx(0.4), cplx(-0.3, 0.1), cplx(0.25)};
        GdhParams p = dh_standard(alpha, 2.0);
        auto els = find_idempotents_nilpotents(p);
        for (int i = 0; i < 3; ++i) {
            auto r = kovalevskaya_exponents(p, els[1 + i]);
            auto want = sorted({-1.0, 1.0 / alpha[i], 1.0});
            for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(r[k] - want[k]));
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max deviation %.2e", worst);
    report(8, "Kovalevskaya exponents", worst <= 1e-9, buf);
}

void criterion9() {
    bool pass = true;
    std::string detail;
    for (const auto& row : pp_fixed_rows()) {
        auto failures = pp_row_selfcheck(row);
        if (!failures.empty()) {
            pass = false;
            detail = failures.front();
        }
        for (const auto& [pre_label, map] : row.preimages)
            if (!verify_preimage_edge(row, pp_row_by_label(pre_label), map)) {
                pass = false;
                detail = row.label + " preimage via " + map;
            }
        auto c = classify_pp(row.gdh);
        if (!std::holds_alternative<PpEntry>(c) ||
            std::get<PpEntry>(c).label != row.label) {
            pass = false;
            detail = "classification misses " + row.label;
        }
    }
    auto expect_label = [&](const GdhParams& p, const std::string& want) {
        auto c = classify_pp(p);
        if (!std::holds_alternative<PpEntry>(c) || std::get<PpEntry>(c).label != want) {
            pass = false;
            detail = "classification misses " + want;
        }
    };
    expect_label(eiv_row(1, 4, 3).gdh, "e.IV(1,4,3)");
    expect_label(eiv_row(2, 3, -2).gdh, "e.IV(2,3,-2)");
    expect_label(eiv_row(5, 2, 4).gdh, "e.IV(5,2,4)");
    if (!std::holds_alternative<NoPP>(classify_pp(eiv_row(5, 2, 3).gdh))) {
        pass = false;
        detail = "e.IV(5,2,3) should have no PP";
    }
    report(9, "Painleve catalog", pass,
           pass ? "all rows self-check, preimage edges reproduced, labels recovered"
                : detail);
}

void criterion10() {
    std::vector<cplx> taus;
    for (int i = 0; i < 30; ++i)
        taus.push_back(cplx(0.31, 0.42) + double(i) * cplx(0.037, 0.021));
    double worst_cf = 0;
    auto run = [&](const std::string& label, const ClosedFormParams& prm) {
        auto sol = closed_form(label, prm);
        for (cplx tau : taus) {
            auto [x, xd] = sol.eval(tau);
            if (norm_inf(x) > 1e6) continue;
            double scale = std::max(1.0, norm_inf(x) * norm_inf(x));
            worst_cf = std::max(worst_cf,
                                norm_inf(xd - eval_gdh_rhs(sol.system, x)) / scale);
        }
    };
    ClosedFormParams p1;
    cplx c2(0.6, 0.1), c3(1.0, -0.3);
    p1.curve_point = {std::sqrt(c2 * c2 + c3 * c3), c2, c3};
    run("Ex1.general", p1);
    run("Ex1.special1", {});
    run("Ex1.special2", {});
    run("Ex1.special3", {});
    ClosedFormParams p2;
    cplx d2(1.0, 0.0), d3(1.2, 0.4);
    p2.curve_point = {std::pow(d2 * d2 * d2 + 4.0 / 27.0 * d3 * d3 * d3, 1.0 / 3.0), d2, d3};
    run("Ex2.general", p2);
    run("Ex2.special1", {});
    run("Ex2.special2", {});
    run("Ex2.special3", {});
    ClosedFormParams p4;
    p4.C = cplx(0.4, 0.3);
    run("Ex4.general", p4);
    run("Ex4.special3", {});

    // Weierstrass ODE residual for the equianharmonic invariants
    WeierstrassParams w{0.0, 1.0 / 27.0};
    Rng rng(20010);
    double worst_wp = 0;
    for (int i = 0; i < 100; ++i) {
        cplx z = rng.box(1.3);
        if (std::abs(z) < 0.05) continue;
        auto [pp, dp] = weierstrass_p(w, z);
        worst_wp = std::max(worst_wp, std::abs(dp * dp - 4.0 * pp * pp * pp + w.g3) /
                                          std::max(1.0, std::abs(pp * pp * pp)));
    }
    // Chazy-XI(4) special solutions
    auto [A, B, C, D] = chazy_xi_coefficients(4.0, 0.4);
    double worst_chazy = 0;
    for (int i = 0; i < 10; ++i) {
        cplx tau = rng.box() + cplx(1.8, 0.9);
        Jet t = Jet::var(tau);
        Jet t4 = jet_ipow(t, 4);
        Jet u = (Jet(cplx(1)) - 5.0 * t4) / (2.0 * t * (Jet(cplx(1)) + 3.0 * t4));
        worst_chazy = std::max(worst_chazy, std::abs(chazy_residual(A, B, C, D, u)));
        for (double coef : {0.5, -5.0 / 6.0, -1.0 / 3.0}) {
            Jet ur = Jet(cplx(coef)) / t;
            worst_chazy = std::max(worst_chazy, std::abs(chazy_residual(A, B, C, D, ur)));
        }
    }
    // trajectory-averaged u along row V
    GdhParams pv = make_gdh(1, 1, 1, 0, 0, 0, 2);
    Vec3 x0{cplx(0.42, 0.13), cplx(-0.31, 0.07), cplx(0.11, -0.23)};
    IntegratorConfig cfg;
    cfg.rel_tol = cfg.abs_tol = 1e-12;
    std::vector<cplx> ttaus;
    for (int i = 0; i <= 12; ++i) ttaus.push_back(double(i) * cplx(0.03, 0.01));
    auto states = integrate_at([&](const Vec3& x) { return eval_gdh_rhs(pv, x); }, x0,
                               ttaus, cfg);
    double worst_mean = 0;
    for (const auto& x : states)
        worst_mean = std::max(worst_mean,
                              std::abs(chazy_residual(A, B, C, D, chazy_mean_jet(pv, x))));
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "closed forms %.2e, wp ODE %.2e, Chazy specials %.2e, averaged %.2e",
                  worst_cf, worst_wp, worst_chazy, worst_mean);
    report(10, "closed forms and Chazy-XI(4)",
           worst_cf <= 1e-9 && worst_wp <= 1e-9 && worst_chazy <= 1e-9 &&
               worst_mean <= 1e-7,
           buf);
}

void criterion11() {
    Rng rng(20011);
    double worst_id = 0;
    for (int i = 0; i < 100; ++i) {
        Vec3 x = rng.vec3();
        auto I = first_integral_eval("Ex1", x);
        worst_id = std::max(worst_id, std::abs(I[0] - (I[1] - I[2])));
    }
    struct Case {
        std::string label;
        GdhParams p;
        double n, q;
    };
    std::vector<Case> cases{{"Ex1", make_gdh(1, 1, 0, 0, 0, 0, 1), 0, 0},
                            {"Ex2", make_gdh(1, 1, 1, 0, 0, 0, 2), 0, 0},
                            {"Ex3", eiv_params(2, 2, 1), 2, 2},
                            {"Ex4", make_gdh(0, 0, 0, 0, 1, 0, 1), 0, 0}};
    double worst_dr = 0;
    for (const auto& cs : cases) {
        Vec3 x0{cplx(0.42, 0.13), cplx(-0.31, 0.07), cplx(0.11, -0.23)};
        IntegratorConfig cfg;
        cfg.rel_tol = cfg.abs_tol = 1e-12;
        std::vector<cplx> taus;
        for (int i = 0; i <= 20; ++i) taus.push_back(double(i) * cplx(0.02, 0.012));
        auto states = integrate_at([&](const Vec3& x) { return eval_gdh_rhs(cs.p, x); },
                                   x0, taus, cfg);
        auto ref = first_integral_eval(cs.label, states.front(), cs.n, cs.q);
        for (const auto& x : states) {
            auto I = first_integral_eval(cs.label, x, cs.n, cs.q);
            for (size_t k = 0; k < I.size(); ++k)
                worst_dr = std::max(worst_dr, std::abs(I[k] - ref[k]) /
                                                  std::max(1.0, std::abs(ref[k])));
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "trajectory drift %.2e, Ex1 identity %.2e", worst_dr,
                  worst_id);
    report(11, "first integrals", worst_dr <= 1e-7 && worst_id <= 1e-12, buf);
}

void criterion12() {
    Rng rng(20012);
    double worst_cont = 0;
    for (int i = 0; i < 100; ++i) {
        cplx a = rng.box(1.2), b = rng.box(1.2), c = rng.box() + cplx(2.5, 0);
        cplx t = 0.65 * rng.box();
        cplx lhs = c * hyp2f1(a, b, c, t) - c * hyp2f1(a + 1.0, b, c, t) +
                   b * t * hyp2f1(a + 1.0, b + 1.0, c + 1.0, t);
        worst_cont = std::max(worst_cont, std::abs(lhs));
    }
    double worst_oracle = 0;
    for (int i = 0; i < 20; ++i) {
        cplx a = rng.box(), b = rng.box(), c = rng.box() + cplx(2.2, 0);
        cplx t = 0.7 * rng.box();
        worst_oracle = std::max(worst_oracle,
                                std::abs(hyp2f1(a, b, c, t) - oracle_2f1(a, b, c, t)));
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "contiguous %.2e, series oracle %.2e", worst_cont,
                  worst_oracle);
    report(12, "hypergeometric evaluation", worst_cont <= 1e-11 && worst_oracle <= 1e-13,
           buf);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 12 criteria PASS\n");
    return 0;
}
