#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "gdh/numerics.hpp"
#include "gdh/params.hpp"

namespace testutil {

using gdh::cplx;
using gdh::Vec3;

inline void check_close(cplx got, cplx want, double tol = 1e-12) {
    CAPTURE(got, want, tol);
    CHECK(std::abs(got - want) <= tol);
}

inline void check_close3(const Vec3& got, const Vec3& want, double tol = 1e-12) {
    for (int i = 0; i < 3; ++i) check_close(got[i], want[i], tol);
}

// random proper gDH parameters with O(1) entries
inline gdh::GdhParams random_proper(gdh::Rng& rng) {
    for (int tries = 0; tries < 100; ++tries) {
        gdh::GdhParams p;
        p.a1 = rng.box();
        p.a2 = rng.box();
        p.a3 = rng.box();
        p.b1 = rng.box();
        p.b2 = rng.box();
        p.b3 = rng.box();
        p.c = rng.box() + cplx(1.5, 0);
        auto rep = gdh::properness(p);
        if (rep.is_proper && std::abs(rep.rho_inv) > 0.05 && std::abs(rep.nbar) > 0.05)
            return p;
    }
    throw std::runtime_error("no proper sample found");
}

} // namespace testutil
