#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "rmt/oracles.hpp"
#include "rmt/weights.hpp"

using namespace rmt;

namespace {
const double kPi = std::acos(-1.0);
const double kSqrtPi = std::sqrt(kPi);
}  // namespace

TEST_CASE("direct quadrature of the plain weighted integrals") {
    Vdm2Spec empty;
    empty.N = 0;
    empty.g = gaussian_weight(1.0);
    CHECK(std::abs(direct_quadrature_z(empty).value - 1.0) < 1e-12);

    Vdm2Spec n1 = empty;
    n1.N = 1;
    CHECK(std::abs(direct_quadrature_z(n1).value - kSqrtPi) < 1e-8);

    Vdm2Spec n2 = empty;
    n2.N = 2;
    CHECK(std::abs(direct_quadrature_z(n2).value - kPi) < 1e-6);

    SqrtBerSpec sb;
    sb.f_weights = {gaussian_weight(1.0)};
    CHECK(std::abs(direct_quadrature_z(sb).value - kSqrtPi) < 1e-8);
}

TEST_CASE("dimension guard") {
    Vdm2Spec big;
    big.N = 5;
    big.g = gaussian_weight(1.0);
    CHECK_THROWS_AS(direct_quadrature_z(big), DimensionTooLarge);
}

TEST_CASE("matrix sampling determinism") {
    SpectralParameters kappa;
    kappa.bosonic = {cplx(0.4, 0.6)};
    kappa.fermionic = {cplx(0.2, 0.0)};
    McConfig mc;
    mc.samples = 20000;
    mc.seed = 9;
    const OracleResult a = mc_matrix_average("gaussian", {}, 2, kappa, mc);
    const OracleResult b = mc_matrix_average("gaussian", {}, 2, kappa, mc);
    CHECK(a.value == b.value);
    CHECK(a.error == b.error);
    McConfig other = mc;
    other.seed = 10;
    const OracleResult c = mc_matrix_average("gaussian", {}, 2, kappa, other);
    CHECK(a.value != c.value);
}

TEST_CASE("matrix sampling sanity") {
    // Mean of the 1x1 characteristic polynomial at the origin: the first
    // moment of the level, which vanishes for the symmetric weight.
    SpectralParameters kappa;
    kappa.fermionic = {cplx(0.0)};
    McConfig mc;
    mc.samples = 100000;
    mc.seed = 3;
    const OracleResult o = mc_matrix_average("gaussian", {}, 1, kappa, mc);
    CHECK(std::abs(o.value) <= 3.0 * o.error);
    CHECK(o.clamp_rate == 0.0);
}

TEST_CASE("circular ensemble sampling runs deterministically") {
    SpectralParameters kappa;
    kappa.bosonic = {cplx(1.7, 0.4)};  // pole well outside the unit circle
    kappa.fermionic = {cplx(0.1, 0.2)};
    McConfig mc;
    mc.samples = 60000;
    mc.seed = 5;
    const OracleResult o = mc_matrix_average("circular", {}, 2, kappa, mc);
    CHECK(o.error > 0.0);
    CHECK(std::isfinite(std::abs(o.value)));
}

TEST_CASE("integration theorems on random draws") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        TheoremReport a = andreief_check(seed, 2, 1, 1);
        CHECK(a.pass);
        CHECK(a.rel_dev <= 1e-7);
        TheoremReport a0 = andreief_check(seed, 1, 0, 0);
        CHECK(a0.pass);
        TheoremReport d = debruijn_check(seed, 2, 0);
        CHECK(d.pass);
        CHECK(d.rel_dev <= 1e-7);
        TheoremReport d1 = debruijn_check(seed, 1, 1);
        CHECK(d1.pass);
    }
}
