#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "rmt/errors.hpp"
#include "rmt/weights.hpp"

using namespace rmt;

namespace {
const double kPi = std::acos(-1.0);
const double kSqrtPi = std::sqrt(kPi);
}  // namespace

TEST_CASE("gaussian moments") {
    WeightFunction w = gaussian_weight();
    CHECK(std::abs(moment(w, 1, 1) - kSqrtPi) < 1e-12);
    CHECK(std::abs(moment(w, 3, 1) - kSqrtPi / 2.0) < 1e-12);
    CHECK(std::abs(moment(w, 2, 2) - kSqrtPi / 2.0) < 1e-12);
    CHECK(std::abs(moment(w, 2, 1)) < 1e-12);
    CHECK(std::abs(moment(w, 4, 1)) < 1e-12);
}

TEST_CASE("laguerre moments") {
    WeightFunction w = laguerre_weight(0.0, 1.0);
    CHECK(std::abs(moment(w, 1, 1) - 1.0) < 1e-10);
    CHECK(std::abs(moment(w, 3, 1) - 2.0) < 1e-10);  // Gamma(3)
    WeightFunction w2 = laguerre_weight(1.5, 2.0);
    const double expect = std::tgamma(2.5) / std::pow(2.0, 2.5);
    CHECK(std::abs(moment(w2, 1, 1) - expect) < 1e-10 * expect);
}

TEST_CASE("cauchy transform") {
    WeightFunction w = gaussian_weight();
    // Narrow peak approximates a point mass: transform ~ 1/(pole - x0).
    WeightFunction narrow = gaussian_weight(1.0 / (2.0 * 1e-8));  // sigma = 1e-4
    const cplx pole(0.0, 1.0);
    const cplx val = cauchy_transform(narrow, pole) / moment(narrow, 1, 1);
    CHECK(std::abs(val - cplx(0.0, -1.0)) < 1e-6);

    // Conjugate symmetry for real nonnegative line weights.
    const cplx p2(2.0, 1.0);
    CHECK(std::abs(cauchy_transform(w, std::conj(p2)) - std::conj(cauchy_transform(w, p2))) <
          1e-10);

    // Monomial insertion z^1: integral x e^{-x^2}/(p - x).
    const cplx direct =
        integrate([&](double x) { return x * std::exp(-x * x) / (p2 - x); }, -12.0, 12.0)
            .value;
    CHECK(std::abs(cauchy_transform(w, p2, 2, 1) - direct) < 1e-9);

    CHECK_THROWS_AS(cauchy_transform(w, cplx(0.5, 0.0)), PoleOnSupport);
}

TEST_CASE("double cauchy") {
    // Disjoint real supports [0,1] and [2,3] with unit densities.
    WeightFunction a = shifted_line_weight([](double) { return cplx(1.0); }, 0.0, 1.0, 0.0);
    WeightFunction b = shifted_line_weight([](double) { return cplx(1.0); }, 2.0, 3.0, 0.0);
    // int_0^1 int_2^3 1/(z1 - z2) = closed log expression.
    auto ff = [](double t) { return t == 0.0 ? 0.0 : t * std::log(std::abs(t)); };
    // F(t) = t log|t| - t is an antiderivative of log|t|; iterate the double integral.
    const double expect = -((ff(3.0) - 3.0) - 2.0 * (ff(2.0) - 2.0) + (ff(1.0) - 1.0));
    const cplx got = double_cauchy(a, b);
    CHECK(std::abs(got - expect) < 1e-7);
    // Swapping the weights flips the sign.
    CHECK(std::abs(double_cauchy(b, a) + got) < 1e-7);
}

TEST_CASE("double pole transform") {
    WeightFunction w = gaussian_weight();
    const cplx kappa(0.4, 0.9), lambda(-0.3, -0.7);
    const cplx direct =
        integrate([&](double x) { return std::exp(-x * x) / ((kappa - x) * (lambda - x)); },
                  -12.0, 12.0)
            .value;
    CHECK(std::abs(double_pole_transform(w, kappa, lambda) - direct) < 1e-9);
}

TEST_CASE("bimoment matrix of the gaussian weight") {
    MomentMatrix m = bimoment_matrix(gaussian_weight(), 3);
    const double e[3][3] = {{kSqrtPi, 0.0, kSqrtPi / 2.0},
                            {0.0, kSqrtPi / 2.0, 0.0},
                            {kSqrtPi / 2.0, 0.0, 3.0 * kSqrtPi / 4.0}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(std::abs(m.entries(i, j) - e[i][j]) < 1e-10);
    CHECK(m.kind == MomentKind::Bimoment);
    CHECK(m.condition_estimate >= 1.0);
}

TEST_CASE("circle weight bimoments are diagonal") {
    WeightFunction w = ensemble_weight("circular", {});
    MomentMatrix m = bimoment_matrix(w, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const double expect = i == j ? 2 * kPi : 0.0;
            CHECK(std::abs(m.entries(i, j) - expect) < 1e-10);
        }
}

TEST_CASE("skew moment matrices are antisymmetric") {
    WeightFunction w = gaussian_weight();
    MomentMatrix q = skew_quaternion_matrix(w, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(std::abs(q.entries(i, j) + q.entries(j, i)) < 1e-12);
    CHECK(std::abs(q.entries(0, 0)) == 0.0);

    MomentMatrix r = skew_real_ordered_matrix(w, 4, false);
    CHECK(r.entries.rows() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(std::abs(r.entries(i, j) + r.entries(j, i)) < 1e-10);

    MomentMatrix rb = skew_real_ordered_matrix(w, 3, true);
    CHECK(rb.entries.rows() == 4);  // bordered by one extra row/column
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(std::abs(rb.entries(i, j) + rb.entries(j, i)) < 1e-10);
}

TEST_CASE("ensemble catalog") {
    WeightFunction gue = ensemble_weight("gue", {});
    CHECK(gue.support == Support::RealLine);
    CHECK(std::abs(gue.density(0.7) - std::exp(-0.49)) < 1e-14);

    WeightFunction chiral = ensemble_weight("chiral", {{"M", 2.0}, {"N", 2.0}});
    CHECK(chiral.support == Support::HalfLine);

    WeightFunction so = ensemble_weight("so-group", {{"chi", 0.0}});
    CHECK(so.support == Support::Interval);

    CHECK_THROWS_AS(ensemble_weight("laguerre", {{"nu", -2.0}}), InvalidParameter);
}

TEST_CASE("positive definiteness of small bimoment matrices") {
    for (const WeightFunction& w : {gaussian_weight(), laguerre_weight(0.5, 1.0)}) {
        MomentMatrix m = bimoment_matrix(w, 4);
        // Leading principal minors positive for a real nonnegative weight.
        for (std::size_t d = 1; d <= 4; ++d) {
            ComplexMatrix sub(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) sub(i, j) = m.entries(i, j);
            CHECK(determinant(sub).real() > 0.0);
        }
    }
}
