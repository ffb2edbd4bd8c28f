#include <catch2/catch_amalgamated.hpp>

#include "gdh/painleve.hpp"
#include "helpers.hpp"

using namespace gdh;
using testutil::check_close;
using testutil::check_close3;

namespace {

Vec3 eval_x(const ClosedFormSolution& sol, cplx tau) { return sol.eval(tau).first; }

double closed_form_residual(const ClosedFormSolution& sol, const std::vector<cplx>& taus) {
    double worst = 0;
    for (cplx tau : taus) {
        auto [x, xd] = sol.eval(tau);
        double scale = std::max(1.0, norm_inf(x) * norm_inf(x));
        if (norm_inf(x) > 1e6) continue;  // pole-avoidance guard
        Vec3 want = eval_gdh_rhs(sol.system, x);
        worst = std::max(worst, norm_inf(xd - want) / scale);
    }
    return worst;
}

std::vector<cplx> tau_arc(cplx base, cplx step, int count) {
    std::vector<cplx> out;
    for (int i = 0; i < count; ++i) out.push_back(base + double(i) * step);
    return out;
}

} // namespace

TEST_CASE("pp_exponents") {
    SECTION("row II") {
        auto e = pp_exponents(gdh_to_alt(make_gdh(1, 1, 0, 0, 0, 0, 1)));
        REQUIRE(e.n.is_finite());
        check_close(e.n.v, 1.0, 1e-12);
        CHECK(e.r[0].first.close_to(ExpVal::fin(1.0)));
        CHECK(e.r[0].second.close_to(ExpVal::inf()));
        CHECK(e.r[1].first.close_to(ExpVal::fin(1.0)));
        CHECK(e.r[2].first.close_to(ExpVal::inf()));
        CHECK(e.r[2].second.close_to(ExpVal::fin(-2.0)));
    }
    SECTION("row e.II(inf)") {
        auto e = pp_exponents(gdh_to_alt(make_gdh(0, 0, 0, 1, 1, 1, 3)));
        CHECK_FALSE(e.n.is_finite());
        for (int i = 0; i < 3; ++i) {
            CHECK(e.r[i].first.close_to(ExpVal::inf()));
            CHECK(e.r[i].second.close_to(ExpVal::fin(3.0)));
        }
    }
    SECTION("reciprocal-sum identity on random proper inputs") {
        Rng rng(401);
        int done = 0;
        while (done < 200) {
            GdhParams p = testutil::random_proper(rng);
            AltParams v = gdh_to_alt(p);
            auto e = pp_exponents(v);
            if (!e.n.is_finite()) continue;
            bool all_finite = true;
            cplx sum = -1.0 / (e.n.v + 1.0);
            for (int i = 0; i < 3; ++i) {
                if (!e.r[i].first.is_finite() || !e.r[i].second.is_finite()) {
                    all_finite = false;
                    break;
                }
                sum += 1.0 / e.r[i].first.v + 1.0 / e.r[i].second.v;
            }
            if (!all_finite) continue;
            ++done;
            check_close(sum, 1.0, 1e-11);
            // the auxiliary exponents satisfy 1/(n+1) + 1/q + 1/q' = 1
            for (int i = 0; i < 3; ++i) {
                if (!e.q[i].first.is_finite() || !e.q[i].second.is_finite()) continue;
                check_close(1.0 / (e.n.v + 1.0) + 1.0 / e.q[i].first.v +
                                1.0 / e.q[i].second.v,
                            1.0, 1e-10);
            }
        }
    }
}

TEST_CASE("pp table self-checks") {
    SECTION("fixed rows") {
        for (const auto& row : pp_fixed_rows()) {
            auto failures = pp_row_selfcheck(row);
            CAPTURE(row.label);
            CHECK(failures.empty());
            if (!failures.empty())
                for (const auto& f : failures) UNSCOPED_INFO(f);
        }
    }
    SECTION("family instances") {
        for (long n : {1L, 2L, 3L, 4L, 5L, -3L}) {
            for (const char* fam :
                 {"e.I.1", "e.I.2", "e.II", "e.IV.4", "e.IV(n,1,inf)"}) {
                auto row = detail::family_row(fam, n);
                CAPTURE(row.label);
                CHECK(pp_row_selfcheck(row).empty());
            }
        }
        for (auto [n, q, r] : std::vector<std::array<long, 3>>{
                 {1, 2, 3}, {1, 3, -2}, {1, 4, 5}, {2, 2, 2}, {2, 3, -4},
                 {3, 2, 3}, {5, 2, 4}, {4, 1, 3}}) {
            auto row = eiv_row(n, q, r);
            CAPTURE(row.label);
            CHECK(pp_row_selfcheck(row).empty());
        }
        for (long r : {2L, 3L, -5L}) {
            auto row = eiv_row(std::nullopt, 1, r);
            CHECK(pp_row_selfcheck(row).empty());
            auto row2 = eiv_row(std::nullopt, 2, r);
            CHECK(pp_row_selfcheck(row2).empty());
            for (int which : {1, 2, 3})
                CHECK(pp_row_selfcheck(detail::eiv_image_row(which, r)).empty());
        }
    }
}

TEST_CASE("classification") {
    SECTION("row V") {
        auto c = classify_pp(make_gdh(1, 1, 1, 0, 0, 0, 2));
        REQUIRE(std::holds_alternative<PpEntry>(c));
        CHECK(std::get<PpEntry>(c).label == "n=1 V");
    }
    SECTION("the Nahm system matches XIII.4 through the group") {
        auto c = classify_pp(make_gdh(0, 0, 0, 0, 0, 0, 1));
        REQUIRE(std::holds_alternative<PpEntry>(c));
        CHECK(std::get<PpEntry>(c).label == "n=1 XIII.4");
    }
    SECTION("DH rule") {
        auto c = classify_pp(dh_standard({cplx(0.5), cplx(1.0 / 3), cplx(1.0 / 7)}, 2.0));
        REQUIRE(std::holds_alternative<DhRule>(c));
        const auto& rule = std::get<DhRule>(c);
        CHECK(rule.has_pp);
        REQUIRE(rule.N[0].has_value());
        CHECK(*rule.N[0] == 2);
        CHECK(*rule.N[1] == 3);
        CHECK(*rule.N[2] == 7);
        auto c2 = classify_pp(dh_standard({cplx(0.4), cplx(1.0 / 3), cplx(0.5)}, 2.0));
        REQUIRE(std::holds_alternative<DhRule>(c2));
        CHECK_FALSE(std::get<DhRule>(c2).has_pp);
        auto c3 = classify_pp(dh_standard({cplx(0), cplx(-1.0 / 4), cplx(0.5)}, 2.0));
        REQUIRE(std::holds_alternative<DhRule>(c3));
        CHECK(std::get<DhRule>(c3).has_pp);  // N = (infinity, -4, 2)
        CHECK_FALSE(std::get<DhRule>(c3).N[0].has_value());
    }
    SECTION("disguised DH systems still hit the reciprocal-integer rule") {
        GdhParams dh = dh_standard({cplx(0.5), cplx(1.0 / 3), cplx(1.0 / 7)}, 2.0);
        GroupElement g;
        g.signs = {false, true, false};
        g.perm = {2, 0, 1};
        GdhParams moved = apply_group_element(g, dh).params;
        cplx sc(1.4, 0.5);
        moved = make_gdh(sc * moved.a1, sc * moved.a2, sc * moved.a3, sc * moved.b1,
                         sc * moved.b2, sc * moved.b3, sc * moved.c);
        auto c = classify_pp(moved);
        REQUIRE(std::holds_alternative<DhRule>(c));
        CHECK(std::get<DhRule>(c).has_pp);
    }
    SECTION("every fixed row classifies to its own label") {
        for (const auto& row : pp_fixed_rows()) {
            auto c = classify_pp(row.gdh);
            CAPTURE(row.label);
            REQUIRE(std::holds_alternative<PpEntry>(c));
            CHECK(std::get<PpEntry>(c).label == row.label);
        }
    }
    SECTION("fixed rows survive a group disguise and rescaling") {
        Rng rng(411);
        auto all = all_group_elements();
        for (size_t k = 0; k < pp_fixed_rows().size(); k += 5) {
            const auto& row = pp_fixed_rows()[k];
            const auto& g = all[(7 * k + 11) % all.size()];
            GdhParams moved;
            try {
                moved = apply_group_element(g, row.gdh).params;
            } catch (const UndefinedTransform&) {
                continue;
            }
            cplx s = rng.box() + cplx(1.5, 0);
            moved = make_gdh(s * moved.a1, s * moved.a2, s * moved.a3, s * moved.b1,
                             s * moved.b2, s * moved.b3, s * moved.c);
            if (!is_proper(moved)) continue;
            auto c = classify_pp(moved);
            CAPTURE(row.label);
            REQUIRE(std::holds_alternative<PpEntry>(c));
            CHECK(std::get<PpEntry>(c).label == row.label);
        }
    }
    SECTION("e.IV family members") {
        auto check_family = [&](std::optional<long> n, long q, long r) {
            auto c = classify_pp(eiv_row(n, q, r).gdh);
            REQUIRE(std::holds_alternative<PpEntry>(c));
            CHECK(std::get<PpEntry>(c).label == detail::eiv_label(n, q, r));
        };
        check_family(1, 4, 3);
        check_family(2, 3, -2);
        check_family(5, 2, 4);
        check_family(4, 1, 3);
        check_family(std::nullopt, 2, 3);
    }
    SECTION("family members survive a group disguise and rescaling") {
        Rng rng(413);
        auto all = all_group_elements();
        // r and -r label the same orbit, so a disguised member may recover
        // either sign
        std::vector<std::pair<GdhParams, std::vector<std::string>>> cases{
            {detail::family_row("e.I.1", 3).gdh, {"e.I.1(3)"}},
            {eiv_row(3, 2, 5).gdh, {"e.IV(3,2,5)", "e.IV(3,2,-5)"}},
            {detail::eiv_image_row(2, 4).gdh, {"e.IV.2(4)", "e.IV.2(-4)"}},
            {detail::family_row("e.IV(n,1,inf)", 2).gdh, {"e.IV(2,1,inf)"}}};
        size_t pick = 5;
        for (const auto& [gdhp, wants] : cases) {
            GdhParams moved;
            try {
                moved = apply_group_element(all[pick = (pick * 7 + 3) % all.size()],
                                            gdhp).params;
            } catch (const UndefinedTransform&) {
                continue;
            }
            cplx sc = rng.box() + cplx(1.6, 0);
            moved = make_gdh(sc * moved.a1, sc * moved.a2, sc * moved.a3, sc * moved.b1,
                             sc * moved.b2, sc * moved.b3, sc * moved.c);
            if (!is_proper(moved)) continue;
            auto c = classify_pp(moved);
            CAPTURE(wants.front());
            REQUIRE(std::holds_alternative<PpEntry>(c));
            std::string got = std::get<PpEntry>(c).label;
            CHECK(std::find(wants.begin(), wants.end(), got) != wants.end());
        }
        // direct (undisguised) members recover the printed sign of r
        auto direct = classify_pp(eiv_row(3, 2, -5).gdh);
        REQUIRE(std::holds_alternative<PpEntry>(direct));
        CHECK(std::get<PpEntry>(direct).label == "e.IV(3,2,-5)");
    }
    SECTION("e.IV(5,2,3) has no Painleve property (odd r)") {
        auto c = classify_pp(eiv_row(5, 2, 3).gdh);
        CHECK(std::holds_alternative<NoPP>(c));
    }
    SECTION("pseudo-Euclidean families at specific n") {
        auto c = classify_pp(detail::family_row("e.II", 4).gdh);
        REQUIRE(std::holds_alternative<PpEntry>(c));
        CHECK(std::get<PpEntry>(c).label == "e.II(4)");
    }
    SECTION("generic proper systems have no PP") {
        Rng rng(412);
        GdhParams p = testutil::random_proper(rng);
        CHECK(std::holds_alternative<NoPP>(classify_pp(p)));
    }
    SECTION("improper input is rejected") {
        CHECK_THROWS_AS(classify_pp(make_gdh(1, 1, 1, 1, 1, 1, 3)), ImproperParameters);
    }
}

TEST_CASE("preimage edges") {
    SECTION("fixed-row edges") {
        for (const auto& row : pp_fixed_rows()) {
            for (const auto& [pre_label, map] : row.preimages) {
                CAPTURE(row.label, pre_label, map);
                PpRowData pre = pp_row_by_label(pre_label);
                CHECK(verify_preimage_edge(row, pre, map));
            }
        }
    }
    SECTION("family edges") {
        for (long n : {2L, 4L}) {
            auto row = detail::family_row("e.IV.4", n);
            auto pre = pp_row_by_label(row.preimages.front().first);
            CHECK(verify_preimage_edge(row, pre, "2"));
            auto self = detail::family_row("e.II", n);
            CHECK(verify_preimage_edge(self, self, "3c"));
        }
        for (long r : {3L, -2L}) {
            auto row = detail::eiv_image_row(1, r);
            CHECK(verify_preimage_edge(row, pp_row_by_label(row.preimages.front().first),
                                       "2"));
        }
        auto row2 = detail::eiv_image_row(2, 3);
        CHECK(verify_preimage_edge(row2, pp_row_by_label("e.IV(2,3,3)"), "2"));
        auto row3 = detail::eiv_image_row(3, 3);
        CHECK(verify_preimage_edge(row3, pp_row_by_label("e.IV(inf,2,3)"), "2"));
        // the degenerate-PE family morphism e.IV(n,1,1) -> e.IV(n,1,r)
        auto famr = eiv_row(4, 1, 3);
        CHECK(verify_preimage_edge(famr, pp_row_by_label("e.IV(4,1,1)"), "eiv"));
    }
}

TEST_CASE("integration curves") {
    SECTION("row II curve with the sine solution") {
        // t = (c1 + c3 + c2 sin tau)/(2 c3) on c1^2 - c2^2 - c3^2 = 0
        cplx c2(0.8, 0.3), c3(1.1, -0.2);
        cplx c1 = std::sqrt(c2 * c2 + c3 * c3);
        auto t_of = [&](cplx tau) { return (c1 + c3 + c2 * std::sin(tau)) / (2.0 * c3); };
        auto td_of = [&](cplx tau) { return c2 * std::cos(tau) / (2.0 * c3); };
        CurveEntry curve = curve_by_label("n=1 II");
        // solve for (K1, K2) from two samples of tdot^2 = K1 t^2 - K2 (2t - 1)
        cplx taua(0.3, 0.2), taub(0.9, -0.4);
        cplx ta = t_of(taua), tb = t_of(taub);
        cplx ra = td_of(taua) * td_of(taua), rb = td_of(taub) * td_of(taub);
        cplx det = -ta * ta * (2.0 * tb - 1.0) + tb * tb * (2.0 * ta - 1.0);
        cplx k1 = (-ra * (2.0 * tb - 1.0) + rb * (2.0 * ta - 1.0)) / det;
        cplx k2 = (ta * ta * rb - tb * tb * ra) / det;
        Rng rng(421);
        for (int i = 0; i < 10; ++i) {
            cplx tau = rng.box();
            check_close(curve_residual(curve, k1, k2, t_of(tau), td_of(tau)), 0.0, 1e-10);
        }
        CHECK(curve.curve_type == "rational");
    }
    SECTION("e.IV(n,1,r) curve") {
        // udot^(n+1) = (K1 u - K2)^n; u = cosh tau solves udot^2 = u^2 - 1 at n = 1
        CurveEntry curve = curve_by_label("e.IV(1,2,5)");
        Rng rng(422);
        for (int i = 0; i < 10; ++i) {
            cplx tau = rng.box();
            check_close(curve_residual(curve, 1.0, 1.0, std::cosh(tau), std::sinh(tau)),
                        0.0, 1e-12);
        }
        CurveEntry lin = curve_by_label("e.IV(3,1,2)");
        // udot^4 = (K1 u - K2)^3 with u = tau^4/256: udot = tau^3/64
        for (int i = 0; i < 5; ++i) {
            cplx tau = rng.box() + cplx(2.0, 0);
            cplx u = std::pow(tau, 4.0) / 256.0, ud = std::pow(tau, 3.0) / 64.0;
            check_close(curve_residual(lin, 1.0, 0.0, u, ud), 0.0, 1e-10);
        }
    }
    SECTION("row V curve along a parametric integration") {
        // integrate row V through the offset-exponent scheme, then fit
        // (K1, K2) of tdot^2 = K1 t^3 (t-2) + K2 (2t - 1) and check the rest
        IntegrationSetup setup;
        setup.nbar = 2.0;
        setup.c = 2.0;
        setup.psym.points = {ExtC(cplx(0)), ExtC(cplx(1)), ExtC::infinity()};
        for (int i = 0; i < 3; ++i) {
            cplx shift = (2.0 * setup.kappa[i] - 1.0) * setup.nbar;
            setup.psym.mu[i] = {cplx(-2) - shift, cplx(1) - shift};
        }
        setup.basis = IntegrationSetup::Basis::frobenius_cross;
        setup.K1 = cplx(0.9, 0.1);
        setup.K2 = cplx(0.5, 0.4);
        std::vector<cplx> path;
        for (int i = 0; i <= 20; ++i)
            path.push_back(cplx(0.5, 0.0) + std::polar(0.9, 0.5 + 1.5 * i / 20.0));
        auto samples = parametric_integrate(setup, path);
        GseParams g = gse_from_alt(setup.alt());
        CurveEntry curve = curve_by_label("n=1 V");
        auto td_of = [&](const ParametricSample& s) {
            return tdot_from_x(g, setup.c, s.x);
        };
        auto f1 = [](cplx t) { return t * t * t * (t - 2.0); };
        auto f2 = [](cplx t) { return 2.0 * t - 1.0; };
        const auto &sa = samples[3], &sb = samples[12];
        cplx ra = td_of(sa) * td_of(sa), rb = td_of(sb) * td_of(sb);
        cplx det = f1(sa.t) * f2(sb.t) - f1(sb.t) * f2(sa.t);
        cplx k1 = (ra * f2(sb.t) - rb * f2(sa.t)) / det;
        cplx k2 = (f1(sa.t) * rb - f1(sb.t) * ra) / det;
        for (const auto& s : samples) {
            cplx res = curve_residual(curve, k1, k2, s.t, td_of(s));
            check_close(res, 0.0, 1e-8 * std::max(1.0, std::abs(k1)));
        }
    }
    SECTION("even-r elliptic reduction of the (5,2) curve") {
        CurveEntry hyper = curve_by_label("e.IV(5,2,4)");
        CurveEntry reduced = curve_by_label("e.IV(5,2,r).reduced");
        CHECK(hyper.curve_type == "hyperelliptic");
        CHECK(reduced.curve_type == "elliptic(j=0)");
        Rng rng(423);
        cplx k1(0.8, 0.2), k2(-0.4, 0.6);
        for (int i = 0; i < 10; ++i) {
            cplx u = rng.box() + cplx(1.5, 0.4);
            cplx ud = std::pow(k1 * u * u - k2, 5.0 / 6.0);
            check_close(curve_residual(hyper, k1, k2, u, ud), 0.0,
                        1e-11 * std::max(1.0, std::abs(std::pow(ud, 6.0))));
            cplx v = u * u, vd = 2.0 * u * ud;
            check_close(curve_residual(reduced, k1, k2, v, vd), 0.0,
                        1e-10 * std::max(1.0, std::abs(std::pow(vd, 6.0))));
        }
    }
    SECTION("degenerate constants are flagged") {
        CHECK(curve_degenerate(0.0, 0.0));
        CHECK_FALSE(curve_degenerate(1.0, 0.0));
    }
    SECTION("unknown entries are rejected") {
        CHECK_THROWS_AS(curve_by_label("n=1 IX"), UnknownEntry);
    }
}

TEST_CASE("closed forms") {
    auto taus = tau_arc(cplx(0.31, 0.42), cplx(0.037, 0.021), 30);

    SECTION("Ex1 general and special solutions") {
        ClosedFormParams prm;
        cplx c2(0.6, 0.1), c3(1.0, -0.3);
        prm.curve_point = {std::sqrt(c2 * c2 + c3 * c3), c2, c3};
        CHECK(closed_form_residual(closed_form("Ex1.general", prm), taus) < 1e-9);
        CHECK(closed_form_residual(closed_form("Ex1.special1"), taus) < 1e-9);
        CHECK(closed_form_residual(closed_form("Ex1.special2"), taus) < 1e-9);
        CHECK(closed_form_residual(closed_form("Ex1.special3"), taus) < 1e-9);
        // the printed 5-pole special solution solves gDH(1,1,0;0,0,0;1)
        auto sol = closed_form("Ex1.special3");
        check_close3(eval_x(sol, cplx(0.4, 0.0)),
                     {(1.0 + 0.32) / (0.4 * (1.0 - 0.32)), (1.0 - 0.32) / (0.4 * (1.0 + 0.32)),
                      2.5},
                     1e-12);
        ClosedFormParams bad;
        bad.curve_point = {cplx(1.0), cplx(1.0), cplx(1.0)};
        CHECK_THROWS_AS(closed_form("Ex1.general", bad), CurveConstraintViolated);
    }
    SECTION("Ex2 general and special solutions") {
        ClosedFormParams prm;
        cplx c2(1.0, 0.0), c3(1.2, 0.4);
        cplx c1 = std::pow(c2 * c2 * c2 + 4.0 / 27.0 * c3 * c3 * c3, 1.0 / 3.0);
        prm.curve_point = {c1, c2, c3};
        CHECK(closed_form_residual(closed_form("Ex2.general", prm), taus) < 1e-9);
        prm.sign = -1;
        CHECK(closed_form_residual(closed_form("Ex2.general", prm), taus) < 1e-9);
        CHECK(closed_form_residual(closed_form("Ex2.special1"), taus) < 1e-9);
        CHECK(closed_form_residual(closed_form("Ex2.special2"), taus) < 1e-9);
        CHECK(closed_form_residual(closed_form("Ex2.special3"), taus) < 1e-9);
    }
    SECTION("Ex4 general and special solutions") {
        ClosedFormParams prm;
        prm.C = cplx(0.4, 0.3);
        CHECK(closed_form_residual(closed_form("Ex4.general", prm), taus) < 1e-9);
        CHECK(closed_form_residual(closed_form("Ex4.special3"), taus) < 1e-9);
    }
    SECTION("pseudo-Euclidean families") {
        ClosedFormParams prm;
        prm.C = cplx(1.9, 1.1);  // keeps t away from the singular values
        for (long n : {1L, 2L, 4L}) {
            prm.n = n;
            CAPTURE(n);
            CHECK(closed_form_residual(closed_form("e.II.general", prm), taus) < 1e-9);
            CHECK(closed_form_residual(closed_form("e.I.1.general", prm), taus) < 1e-9);
            CHECK(closed_form_residual(closed_form("e.I.2.general", prm), taus) < 1e-9);
            CHECK(closed_form_residual(closed_form("e.IV(n,1,inf).general", prm), taus) <
                  1e-9);
        }
    }
    SECTION("ray solutions") {
        ClosedFormParams prm;
        Rng rng(431);
        prm.ray_system = testutil::random_proper(rng);
        prm.tau_star = cplx(-1.2, 0.4);
        for (const char* dir : {"e0", "e1", "e2'", "e3"}) {
            prm.ray_direction = dir;
            CHECK(closed_form_residual(closed_form("rays", prm), taus) < 1e-10);
        }
    }
    SECTION("nilpotent directions give constant ray solutions") {
        ClosedFormParams prm;
        prm.ray_system = dh_standard({cplx(0), cplx(1.0 / 3), cplx(0.5)}, 2.0);
        prm.ray_direction = "e1";  // nilpotent when alpha1 = 0
        prm.ray_scale = cplx(0.8, -0.4);
        auto sol = closed_form("rays", prm);
        CHECK(sol.kind == "ray");
        auto [x, xd] = sol.eval(cplx(0.3, 0.7));
        check_close(x[0], prm.ray_scale, 1e-14);
        check_close3(xd, {0, 0, 0}, 1e-14);
        check_close3(eval_gdh_rhs(prm.ray_system, x), {0, 0, 0}, 1e-13);
    }
    SECTION("unknown labels") {
        CHECK_THROWS_AS(closed_form("Ex9.general"), UnknownLabel);
    }
}

TEST_CASE("first integrals") {
    SECTION("Ex1 identity I1 = I2 - I3") {
        Rng rng(441);
        for (int i = 0; i < 100; ++i) {
            Vec3 x = rng.vec3();
            auto I = first_integral_eval("Ex1", x);
            check_close(I[0], I[1] - I[2], 1e-12 * std::max(1.0, std::abs(I[0])));
        }
    }
    SECTION("Ex1 special solution has I1 = 1") {
        auto sol = closed_form("Ex1.special1");
        for (cplx tau : tau_arc(cplx(0.2, 0.3), cplx(0.1, 0.05), 5))
            check_close(first_integral_eval("Ex1", eval_x(sol, tau))[0], 1.0, 1e-12);
    }
    SECTION("constancy along numerically integrated trajectories") {
        struct Case {
            std::string label;
            GdhParams p;
            double n, q;
        };
        std::vector<Case> cases{
            {"Ex1", make_gdh(1, 1, 0, 0, 0, 0, 1), 0, 0},
            {"Ex2", make_gdh(1, 1, 1, 0, 0, 0, 2), 0, 0},
            {"Ex3", eiv_params(2, 2, 1), 2, 2},
            {"Ex4", make_gdh(0, 0, 0, 0, 1, 0, 1), 0, 0},
        };
        for (const auto& cs : cases) {
            CAPTURE(cs.label);
            Vec3 x0{cplx(0.42, 0.13), cplx(-0.31, 0.07), cplx(0.11, -0.23)};
            IntegratorConfig cfg;
            cfg.rel_tol = cfg.abs_tol = 1e-12;
            auto states = integrate_at([&](const Vec3& x) { return eval_gdh_rhs(cs.p, x); },
                                       x0, tau_arc(0.0, cplx(0.02, 0.012), 20), cfg);
            auto ref = first_integral_eval(cs.label, states.front(), cs.n, cs.q);
            for (const auto& x : states) {
                auto I = first_integral_eval(cs.label, x, cs.n, cs.q);
                for (size_t k = 0; k < I.size(); ++k)
                    check_close(I[k], ref[k], 1e-7 * std::max(1.0, std::abs(ref[k])));
            }
        }
    }
    SECTION("improper systems stabilize planes through the diagonal") {
        GdhParams p = make_gdh(cplx(0.4), cplx(-0.2, 0.1), cplx(0.8, -0.1), cplx(0.3),
                               cplx(0.9), cplx(-0.5), cplx(1.0, 0.0));
        // force c = a1 + a2 + a3
        p.c = p.a1 + p.a2 + p.a3;
        Vec3 x0{cplx(0.35, 0.1), cplx(-0.4, 0.2), cplx(0.2, -0.15)};
        IntegratorConfig cfg;
        cfg.rel_tol = cfg.abs_tol = 1e-12;
        auto states = integrate_at([&](const Vec3& x) { return eval_gdh_rhs(p, x); }, x0,
                                   tau_arc(0.0, cplx(0.025, 0.01), 15), cfg);
        auto ref = first_integral_eval("improper", states.front());
        for (const auto& x : states) {
            auto I = first_integral_eval("improper", x);
            for (size_t k = 0; k < I.size(); ++k)
                check_close(I[k], ref[k], 1e-8 * std::max(1.0, std::abs(ref[k])));
        }
    }
    SECTION("symmetric systems with c = a + b") {
        cplx a(0.4, 0.1), b(0.9, -0.3);
        GdhParams p = make_gdh(a, a, a, b, b, b, a + b);
        Vec3 x0{cplx(0.5, 0.05), cplx(-0.3, 0.12), cplx(0.15, -0.22)};
        IntegratorConfig cfg;
        cfg.rel_tol = cfg.abs_tol = 1e-12;
        auto states = integrate_at([&](const Vec3& x) { return eval_gdh_rhs(p, x); }, x0,
                                   tau_arc(0.0, cplx(0.02, 0.013), 15), cfg);
        auto ref = first_integral_eval("S3", states.front());
        check_close(ref[0] * ref[1] * ref[2], 1.0, 1e-10);
        for (const auto& x : states)
            for (int k = 0; k < 3; ++k)
                check_close(first_integral_eval("S3", x)[k], ref[k],
                            1e-8 * std::max(1.0, std::abs(ref[k])));
    }
}

TEST_CASE("Chazy-class residuals") {
    SECTION("zero function") {
        check_close(chazy_residual(1.0, 2.0, 3.0, 4.0, Jet(cplx(0))), 0.0);
    }
    SECTION("rational Chazy-XI(4) solution from Ex2") {
        auto [A, B, C, D] = chazy_xi_coefficients(4.0, 0.4);
        Rng rng(451);
        for (int i = 0; i < 10; ++i) {
            cplx tau = rng.box() + cplx(1.5, 0.8);
            Jet t = Jet::var(tau);
            Jet t4 = jet_ipow(t, 4);
            Jet u = (Jet(cplx(1)) - 5.0 * t4) / (2.0 * t * (Jet(cplx(1)) + 3.0 * t4));
            check_close(chazy_residual(A, B, C, D, u), 0.0, 1e-9);
        }
    }
    SECTION("ray-derived Chazy-XI(4) solutions") {
        auto [A, B, C, D] = chazy_xi_coefficients(4.0, 0.4);
        Rng rng(452);
        for (double coef : {0.5, -5.0 / 6.0, -1.0 / 3.0}) {
            for (int i = 0; i < 5; ++i) {
                cplx tau = rng.box() + cplx(2.0, 0.5);
                Jet u = Jet(cplx(coef)) / Jet::var(tau);
                check_close(chazy_residual(A, B, C, D, u), 0.0, 1e-10);
            }
        }
    }
    SECTION("component average along an Ex2 trajectory") {
        GdhParams p = make_gdh(1, 1, 1, 0, 0, 0, 2);
        auto [A, B, C, D] = chazy_xi_coefficients(4.0, 0.4);
        Vec3 x0{cplx(0.42, 0.13), cplx(-0.31, 0.07), cplx(0.11, -0.23)};
        IntegratorConfig cfg;
        cfg.rel_tol = cfg.abs_tol = 1e-12;
        auto states = integrate_at([&](const Vec3& x) { return eval_gdh_rhs(p, x); }, x0,
                                   tau_arc(0.0, cplx(0.03, 0.01), 12), cfg);
        for (const auto& x : states)
            check_close(chazy_residual(A, B, C, D, chazy_mean_jet(p, x)), 0.0, 1e-7);
    }
    SECTION("general two-parameter family") {
        Rng rng(453);
        for (int rep = 0; rep < 10; ++rep) {
            double N = 2.0 + double(rep % 5);
            cplx lambda = rng.box() + cplx(1.2, 0);
            cplx cp = rng.box();
            cplx cm = 1.0 - cp;
            auto [A, B, C, D] = chazy_xi_coefficients(N, lambda);
            cplx tau = rng.box(0.4) + cplx(1.6, 0.7);
            Jet t = Jet::var(tau);
            Jet tp = jet_pow(t, N / 2.0), tm = jet_pow(t, -N / 2.0);
            Jet num = cp * tp + cm * tm;
            Jet den = t * ((1.0 - N) * cp * tp + (1.0 + N) * cm * tm);
            Jet u = (1.0 / lambda) * (num / den);
            check_close(chazy_residual(A, B, C, D, u), 0.0,
                        1e-8 * std::max(1.0, std::abs(lambda)));
        }
    }
}
