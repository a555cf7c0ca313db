#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "rmt/errors.hpp"
#include "rmt/external_field.hpp"
#include "rmt/quadrature.hpp"

using namespace rmt;

namespace {

const double kPi = std::acos(-1.0);

ExternalFieldSpec laguerre_spec(std::size_t n, double alpha, std::vector<double> field,
                                double c = 1.0, double nu = 0.0) {
    ExternalFieldSpec s;
    s.N = n;
    s.alpha = alpha;
    s.field_eigenvalues = std::move(field);
    s.ensemble = {FactorKind::Laguerre, c, nu, kPi / 2};
    return s;
}

ExternalFieldSpec gaussian_spec(std::size_t n, double alpha, std::vector<double> field,
                                double c = 1.0) {
    ExternalFieldSpec s;
    s.N = n;
    s.alpha = alpha;
    s.field_eigenvalues = std::move(field);
    s.ensemble = {FactorKind::Gaussian, c, 0.0, kPi / 2};
    return s;
}

}  // namespace

TEST_CASE("first kernel entry closed forms") {
    ExternalFieldSpec s = laguerre_spec(1, 0.0, {0.0});
    for (double x : {0.3, 1.0, 2.5})
        for (double y : {0.1, 0.9})
            CHECK(std::abs(r1_entry(s, x, y) - 2 * kPi * std::exp(-x)) < 1e-12);
    // Diagonal is the limit of the off-diagonal value.
    ExternalFieldSpec s3 = laguerre_spec(3, 0.0, {0.0, 0.0, 0.0}, 1.0, 0.5);
    const cplx diag = r1_entry(s3, 1.4, 1.4);
    const cplx near = r1_entry(s3, 1.4, 1.4 + 1e-7);
    CHECK(std::abs(near - diag) < 1e-5 * std::abs(diag));
    // Gaussian diagonal at N=1 is proportional to the plain weight.
    ExternalFieldSpec g = gaussian_spec(1, 0.0, {0.0}, 0.8);
    const cplx ratio = r1_entry(g, 0.7, 0.7) / std::exp(-0.8 * 0.49);
    const cplx ratio2 = r1_entry(g, -0.4, -0.4) / std::exp(-0.8 * 0.16);
    CHECK(std::abs(ratio - ratio2) < 1e-10 * std::abs(ratio));
}

TEST_CASE("second kernel entry") {
    // Vanishes when both step factors vanish.
    ExternalFieldSpec s = laguerre_spec(1, 1.0, {0.5});
    CHECK(std::abs(r2_entry(s, 0.5, -1.0)) == 0.0);
    // Derivative entry agrees with a central difference in the field value.
    ExternalFieldSpec s2 = laguerre_spec(2, 0.7, {0.4, -0.3}, 1.0, 1.5);
    const double e = 0.4, x = 2.1, h = 1e-5;
    const cplx fd = (r2_entry(s2, e + h, x) - r2_entry(s2, e - h, x)) / (2 * h);
    CHECK(std::abs(r2_entry_derivative(s2, e, x) - fd) < 1e-6 * std::abs(fd));
    // Closed form against the defining oscillatory integral (Laguerre,
    // N = 1, nu = 2.5 for absolute convergence).
    ExternalFieldSpec s3 = laguerre_spec(1, 1.0, {0.6}, 1.0, 2.5);
    const double ae = 0.6, xa = 1.7, mu = 1.0 + 2.5;
    auto integrand = [&](double r) {
        const cplx den = std::pow(cplx(1.0, -r), mu);
        const cplx bracket = std::exp(cplx(0.0, ae * r)) - 1.0;  // n = 0 term removed
        return cplx(0.0, 1.0) * std::exp(cplx(0.0, -r * xa)) * bracket / den;
    };
    cplx direct = 0.0;
    for (double a = -4000.0; a < 4000.0; a += 80.0)
        direct += integrate(integrand, a, a + 80.0, 1e-13, 1e-12).value;
    const cplx entry_scale = cplx(0.0, 1.0) / (2 * kPi);  // recorded entry scaling, N = 1
    CHECK(std::abs(r2_entry(s3, ae, xa) / entry_scale - direct) <
          1e-7 * std::abs(direct));
}

TEST_CASE("polynomial row entries") {
    ExternalFieldSpec s = laguerre_spec(2, 0.5, {0.4, -0.2});
    CHECK(std::abs(r3_entry(s, 1, 1.7) - 2 * kPi) < 1e-12);
    // a = 2: monic first-degree polynomial x - (gamma + 1) with gamma = N + nu + 1 - a.
    CHECK(std::abs(r3_entry(s, 2, 1.7) - 2 * kPi * (1.7 - 2.0)) < 1e-10);
    // Degree check: order-a forward differences annihilate the entry.
    ExternalFieldSpec g = gaussian_spec(3, 0.5, {0.4, -0.2, 1.1});
    for (std::size_t a = 1; a <= 3; ++a) {
        const double h = 0.5;
        cplx diff = 0.0;
        for (std::size_t j = 0; j <= a; ++j) {
            const double sign = (a - j) % 2 == 0 ? 1.0 : -1.0;
            double binom = 1.0;
            for (std::size_t i = 0; i < j; ++i)
                binom *= static_cast<double>(a - i) / static_cast<double>(i + 1);
            diff += sign * binom * r3_entry(g, a, 0.3 + static_cast<double>(j) * h);
        }
        CHECK(std::abs(diff) < 1e-8);
    }
}

TEST_CASE("source-free limit correlation") {
    // N = 1 Gaussian: the one-point function is the normalized weight.
    ExternalFieldSpec g = gaussian_spec(1, 0.0, {0.0}, 1.3);
    for (double x : {-0.8, 0.2, 1.1}) {
        const double expect = std::sqrt(1.3 / kPi) * std::exp(-1.3 * x * x);
        CHECK(std::abs(rk_correlation(g, {x}) - expect) < 1e-12);
    }
    // One-point function integrates to N.
    ExternalFieldSpec l = laguerre_spec(3, 0.0, {0.0, 0.0, 0.0}, 1.0, 0.5);
    ExternalFieldKernel ker(l);
    double lo, hi;
    ker.density_window(lo, hi);
    const cplx total = integrate([&](double x) { return ker.rk({x}); }, lo, hi, 1e-10, 1e-8).value;
    CHECK(std::abs(total - 3.0) < 1e-4);
}

TEST_CASE("fixed-field correlation properties") {
    ExternalFieldSpec s = laguerre_spec(2, 0.5, {0.8, -0.4});
    ExternalFieldKernel ker(s);
    // Permutation of the field eigenvalues leaves the result unchanged.
    ExternalFieldSpec p = s;
    std::swap(p.field_eigenvalues[0], p.field_eigenvalues[1]);
    ExternalFieldKernel kerp(p);
    const cplx a = ker.rk({1.3});
    CHECK(std::abs(kerp.rk({1.3}) - a) <= 1e-10 * std::abs(a));
    // Marginalizing the second argument of the pair function recovers the
    // one-point function (pins the normalization).
    double lo, hi;
    ker.density_window(lo, hi);
    const cplx marg =
        integrate([&](double x2) { return ker.rk({1.3, x2}); }, lo, hi, 1e-12, 1e-9).value;
    CHECK(std::abs(marg - a) <= 1e-6 * std::abs(a));
    // Contour-angle convention is recorded only: outputs are bit-identical.
    ExternalFieldSpec w = s;
    w.ensemble.rotation_angle = 0.3;
    ExternalFieldKernel kerw(w);
    CHECK(kerw.rk({1.3}) == a);
}

TEST_CASE("validation errors") {
    ExternalFieldSpec s = laguerre_spec(2, 0.5, {0.8, -0.4});
    CHECK_THROWS_AS(rk_correlation(s, {0.5, 1.0, 1.5}), KExceedsN);
    ExternalFieldSpec d = laguerre_spec(2, 0.5, {0.8, 0.8});
    CHECK_THROWS_AS(ExternalFieldKernel{d}, DegenerateField);
    ExternalFieldSpec bad = laguerre_spec(2, 0.0, {0.0, 0.0}, -1.0);
    CHECK_THROWS_AS(ExternalFieldKernel{bad}, InvalidParameter);
    ExternalFieldSpec wrong = laguerre_spec(2, 0.0, {0.0});
    CHECK_THROWS_AS(ExternalFieldKernel{wrong}, InvalidParameter);
}

TEST_CASE("source-averaged kernels") {
    ExternalFieldSpec s = gaussian_spec(2, 0.3, {0.5, -0.5});
    SourceEnsemble uni{SourceKind::Unitary, gaussian_weight(2.0)};
    IntermediateKernel ku(s, uni);
    // The unitary kind exposes a scalar kernel, not a Pfaffian matrix.
    CHECK_THROWS_AS(ku.pfaffian_matrix({0.4}), Error);
    CHECK(std::isfinite(std::abs(ku.kernel_entry(0.4, -0.2))));

    SourceEnsemble quat{SourceKind::Quaternion, gaussian_weight(2.0)};
    IntermediateKernel kq(s, quat);
    ComplexMatrix pm = kq.pfaffian_matrix({-0.6, 0.7});
    for (std::size_t i = 0; i < pm.rows(); ++i)
        for (std::size_t j = 0; j < pm.cols(); ++j)
            CHECK(std::abs(pm(i, j) + pm(j, i)) < 1e-10);
    const cplx pf = pfaffian(pm);
    const cplx det = determinant(pm);
    CHECK(std::abs(pf * pf - det) <= 1e-10 * std::max(1.0, std::abs(det)));

    SourceEnsemble real{SourceKind::RealSymmetric, gaussian_weight(2.0)};
    IntermediateKernel kr(s, real);
    ComplexMatrix pr = kr.pfaffian_matrix({-0.3, 0.9});
    const cplx pfr = pfaffian(pr);
    const cplx detr = determinant(pr);
    CHECK(std::abs(pfr * pfr - detr) <= 1e-10 * std::max(1.0, std::abs(detr)));

    // Quaternion sources require even dimension; a source average needs a
    // nonzero coupling.
    ExternalFieldSpec odd = gaussian_spec(3, 0.3, {0.5, -0.5, 1.0});
    CHECK_THROWS_AS((IntermediateKernel{odd, quat}), InvalidParameter);
    ExternalFieldSpec zero = gaussian_spec(2, 0.0, {0.5, -0.5});
    CHECK_THROWS_AS((IntermediateKernel{zero, uni}), InvalidParameter);
}
