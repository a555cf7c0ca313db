#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "rmt/matrix.hpp"

using namespace rmt;

namespace {

ComplexMatrix random_antisymmetric(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix m(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            m(a, b) = cplx(u(rng), u(rng));
            m(b, a) = -m(a, b);
        }
    return m;
}

}  // namespace

TEST_CASE("determinant basics") {
    CHECK(determinant(ComplexMatrix(0, 0)) == cplx(1.0));
    ComplexMatrix m(2, 2);
    m(0, 0) = cplx(1.0, 1.0);
    m(0, 1) = cplx(2.0);
    m(1, 0) = cplx(0.5);
    m(1, 1) = cplx(-1.0, 2.0);
    const cplx expect = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    CHECK(std::abs(determinant(m) - expect) < 1e-14);
}

TEST_CASE("determinant multiplicativity") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix a(4, 4), b(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            a(i, j) = cplx(u(rng), u(rng));
            b(i, j) = cplx(u(rng), u(rng));
        }
    const cplx lhs = determinant(a * b);
    const cplx rhs = determinant(a) * determinant(b);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
}

TEST_CASE("pfaffian closed forms") {
    ComplexMatrix m2(2, 2);
    m2(0, 1) = cplx(3.0, -1.0);
    m2(1, 0) = -m2(0, 1);
    CHECK(std::abs(pfaffian(m2) - m2(0, 1)) < 1e-15);

    std::mt19937_64 rng(11);
    ComplexMatrix m4 = random_antisymmetric(rng, 4);
    const cplx expect =
        m4(0, 1) * m4(2, 3) - m4(0, 2) * m4(1, 3) + m4(0, 3) * m4(1, 2);
    CHECK(std::abs(pfaffian(m4) - expect) < 1e-13 * std::abs(expect));
}

TEST_CASE("pfaffian squared equals determinant") {
    std::mt19937_64 rng(17);
    for (std::size_t n = 2; n <= 10; n += 2) {
        for (int rep = 0; rep < 5; ++rep) {
            ComplexMatrix m = random_antisymmetric(rng, n);
            const cplx pf = pfaffian(m);
            const cplx det = determinant(m);
            CHECK(std::abs(pf * pf - det) <= 1e-10 * std::max(1.0, std::abs(det)));
        }
    }
}

TEST_CASE("pfaffian rejects non-antisymmetric input") {
    ComplexMatrix m(2, 2);
    m(0, 0) = cplx(1.0);
    m(0, 1) = cplx(1.0);
    m(1, 0) = cplx(1.0);
    CHECK_THROWS_AS(pfaffian(m), NotAntisymmetric);
    CHECK_THROWS_AS(pfaffian(ComplexMatrix(3, 3)), DimensionMismatch);
}

TEST_CASE("solve and condition estimate") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix a(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) a(i, j) = cplx(u(rng), u(rng));
    ConditionedSolve s = solve(a, ComplexMatrix::identity(3));
    ComplexMatrix prod = a * s.solution;
    double dev = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            dev = std::max(dev, std::abs(prod(i, j) - (i == j ? cplx(1.0) : cplx(0.0))));
    CHECK(dev < 1e-12);
    CHECK(s.condition_estimate >= 1.0);
}

TEST_CASE("solve rejects singular systems") {
    ComplexMatrix a(2, 2);
    a(0, 0) = cplx(1.0);
    a(0, 1) = cplx(2.0);
    a(1, 0) = cplx(2.0);
    a(1, 1) = cplx(4.0);
    CHECK_THROWS_AS(solve(a, ComplexMatrix::identity(2)), SingularBlock);
}

TEST_CASE("blocked determinant split") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix a(2, 2), b(2, 3), c(3, 2), d(3, 3), full(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            full(i, j) = cplx(u(rng), u(rng));
            if (i < 2 && j < 2) a(i, j) = full(i, j);
            if (i < 2 && j >= 2) b(i, j - 2) = full(i, j);
            if (i >= 2 && j < 2) c(i - 2, j) = full(i, j);
            if (i >= 2 && j >= 2) d(i - 2, j - 2) = full(i, j);
        }
    const cplx split = schur_det_split(a, b, c, d);
    const cplx whole = determinant(full);
    CHECK(std::abs(split - whole) < 1e-12 * std::abs(whole));
}
