#pragma once

#include <vector>

#include "rmt/berezinians.hpp"
#include "rmt/weights.hpp"

namespace rmt {

// Average of ratios of characteristic-polynomial-type products against N1
// bosonic weights g_j and N2 fermionic weights f_j, with k1 pole parameters
// (bosonic list) and k2 root parameters (fermionic list).
struct SqrtBerSpec {
    std::vector<WeightFunction> g_weights;
    std::vector<WeightFunction> f_weights;
    SpectralParameters sp;
};

// Shared kernel machinery: moment matrix, its inverse, Cauchy vectors, and
// the one-point-pair building block z11.
class SqrtBerKernel {
  public:
    explicit SqrtBerKernel(const SqrtBerSpec& spec);

    std::size_t n1() const { return g_.size(); }
    std::size_t n2() const { return f_.size(); }
    cplx det_moment() const { return detm_; }
    // Value of the average with no characteristic polynomials at all.
    cplx normalization() const;

    ComplexMatrix g_column(cplx kappa2) const;  // n2 x 1
    ComplexMatrix f_row(cplx kappa1) const;     // 1 x n2
    cplx kernel(cplx kappa1, cplx kappa2) const;
    cplx z11(cplx kappa1, cplx kappa2) const;
    const ComplexMatrix& moment_inverse() const { return minv_; }

    // Moment row [integral of f_b z^{a-1+n2-n1}] used by the k1 < k2 limit rows.
    ComplexMatrix f_moment_row(std::size_t a) const;
    // Column of Eq-type [-delta rows ; g moments] used by the k1 > k2 limit rows.
    ComplexMatrix g_moment_column(std::size_t a) const;

  private:
    std::vector<WeightFunction> g_, f_;
    ComplexMatrix minv_;
    cplx detm_;
};

// Average for k1 = k2 via the kernel determinant; the block form (quotient of
// kernel determinant and normalization) is an internal cross-check path.
cplx z_equal(const SqrtBerSpec& spec, bool block_form = false);

// Average for k1 != k2 via bordered determinants with closed-form limit rows.
cplx z_unequal(const SqrtBerSpec& spec);

// Dispatches on k1 vs k2 and normalizes N2 >= N1 by role exchange.
cplx z_value(const SqrtBerSpec& spec);

}  // namespace rmt
