#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "rmt/quadrature.hpp"

using namespace rmt;

namespace {
const double kPi = std::acos(-1.0);
const double kSqrtPi = std::sqrt(kPi);
}  // namespace

TEST_CASE("adaptive line integrals") {
    auto g = [](double x) { return cplx(std::exp(-x * x)); };
    QuadratureResult r = integrate(g, -12.0, 12.0);
    CHECK(std::abs(r.value - kSqrtPi) < 1e-12);
    CHECK(r.error_estimate < 1e-10);

    auto g2 = [](double x) { return cplx(x * x * std::exp(-x * x)); };
    CHECK(std::abs(integrate(g2, -12.0, 12.0).value - kSqrtPi / 2.0) < 1e-12);

    auto osc = [](double x) { return std::exp(cplx(0.0, 5.0) * x) * std::exp(-x * x); };
    const cplx expect = kSqrtPi * std::exp(-25.0 / 4.0);
    CHECK(std::abs(integrate(osc, -12.0, 12.0).value - expect) < 1e-12);
}

TEST_CASE("endpoint-singular integrand") {
    // x^(-1/2) e^(-x) on the half line: Gamma(1/2) = sqrt(pi).
    auto f = [](double x) { return cplx(std::pow(x, -0.5) * std::exp(-x)); };
    QuadratureResult r = integrate(f, 1e-14, 60.0, 1e-12, 1e-10, 20000);
    CHECK(std::abs(r.value - kSqrtPi) < 1e-6);
}

TEST_CASE("periodic trapezoid rule") {
    CHECK(std::abs(integrate_periodic([](double) { return cplx(1.0); }).value - 2 * kPi) <
          1e-12);
    CHECK(std::abs(integrate_periodic([](double t) {
              return std::exp(cplx(0.0, 1.0) * t);
          }).value) < 1e-12);
    // exp(cos t) integrates to 2*pi*I0(1).
    const double i0 = 1.2660658777520083356;
    CHECK(std::abs(integrate_periodic([](double t) {
              return cplx(std::exp(std::cos(t)));
          }).value -
                   2 * kPi * i0) < 1e-10);
}

TEST_CASE("box integrals") {
    auto f = [](const std::vector<double>& p) {
        return cplx(std::exp(-p[0] * p[0] - p[1] * p[1]));
    };
    QuadratureResult r = integrate_box(f, {-8.0, -8.0}, {8.0, 8.0}, 1e-10);
    CHECK(std::abs(r.value - kPi) < 1e-8);

    auto f3 = [](const std::vector<double>& p) { return cplx(p[0] * p[1] * p[2]); };
    CHECK(std::abs(integrate_box(f3, {0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}, 1e-10).value - 0.125) <
          1e-9);
}

TEST_CASE("ordered-pair integrals") {
    auto one = [](double, double) { return cplx(1.0); };
    CHECK(std::abs(integrate_ordered_pair(one, 0.0, 1.0).value - 0.5) < 1e-9);
    auto gap = [](double a, double b) { return cplx(b - a); };
    CHECK(std::abs(integrate_ordered_pair(gap, 0.0, 1.0).value - 1.0 / 6.0) < 1e-9);
    auto prod = [](double a, double b) { return cplx(a * b * (b - a)); };
    CHECK(std::abs(integrate_ordered_pair(prod, 0.0, 1.0).value - 1.0 / 30.0) < 1e-9);
}
