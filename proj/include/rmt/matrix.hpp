#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "rmt/errors.hpp"

namespace rmt {

using cplx = std::complex<double>;

// Dense complex matrix in row-major order.
class ComplexMatrix {
  public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0)) {}

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ComplexMatrix transpose() const;
    ComplexMatrix operator*(const ComplexMatrix& other) const;
    ComplexMatrix operator-(const ComplexMatrix& other) const;

    double max_abs() const;
    double norm1() const;  // max column sum of absolute values

  private:
    std::size_t rows_, cols_;
    std::vector<cplx> data_;
};

struct ConditionedSolve {
    ComplexMatrix solution;
    double condition_estimate = 0.0;
};

// Determinant via row-pivoted Gaussian elimination with exact swap-sign tracking.
cplx determinant(const ComplexMatrix& m);

// Determinant of an n x n matrix whose entries are supplied row-major in
// extended precision. Building ill-conditioned entries (Cauchy columns, high
// monomial powers) in extended precision keeps the result accurate where
// double-precision entries alone would lose digits.
cplx determinant(std::size_t n, const std::vector<std::complex<long double>>& entries);

// Pfaffian of an even-dimensional antisymmetric matrix by skew-symmetric
// tridiagonalization with pivoting. Sign convention: pf([[0,a],[-a,0]]) = a.
cplx pfaffian(const ComplexMatrix& m);

// Solves m * x = rhs (multiple right-hand sides) and reports a 1-norm
// condition estimate. Throws SingularBlock above the singularity threshold.
ConditionedSolve solve(const ComplexMatrix& m, const ComplexMatrix& rhs);

// det(d) * det(a - b d^{-1} c); equals the determinant of [[a, b], [c, d]].
cplx schur_det_split(const ComplexMatrix& a, const ComplexMatrix& b,
                     const ComplexMatrix& c, const ComplexMatrix& d);

inline constexpr double kSingularConditionThreshold = 1e12;

}  // namespace rmt
