#pragma once

#include <optional>
#include <vector>

#include "rmt/berezinians.hpp"
#include "rmt/sqrtber.hpp"
#include "rmt/weights.hpp"

namespace rmt {

// Average against N copies of a single weight g with squared-Vandermonde
// repulsion: kappa holds the parameters paired with z (k1 poles, k2 roots),
// lambda the parameters paired with conj(z) (l1 poles, l2 roots).
struct Vdm2Spec {
    std::size_t N = 0;
    WeightFunction g;
    SpectralParameters kappa;
    SpectralParameters lambda;
};

// Bimoment matrix, Cauchy-moment vectors, monomial vectors, and the four
// two-point kernels built on them for a given block size d.
class Vdm2Blocks {
  public:
    Vdm2Blocks(const WeightFunction& g, std::size_t d);

    std::size_t d() const { return d_; }
    cplx det_moment() const { return detm_; }
    const ComplexMatrix& moment_inverse() const { return minv_; }

    ComplexMatrix f_row(cplx kappa1) const;         // 1 x d, conj-monomial Cauchy
    ComplexMatrix fstar_column(cplx lambda1) const;  // d x 1, conj-pole Cauchy
    ComplexMatrix lambda_row(cplx lambda2) const;    // 1 x d monomials
    ComplexMatrix k_column(cplx kappa2) const;       // d x 1 monomials
    cplx z1010(cplx kappa1, cplx lambda1) const;

    cplx k11(cplx lambda2, cplx kappa2) const;
    cplx k12(cplx lambda1, cplx lambda2) const;
    cplx k21(cplx kappa1, cplx kappa2) const;
    cplx k22(cplx kappa1, cplx lambda1) const;

  private:
    WeightFunction g_;
    std::size_t d_;
    ComplexMatrix minv_;
    cplx detm_;
};

// Main determinantal reduction, applicable when d = k2+N-k1 = l2+N-l1 >= 0.
cplx z_tilde(const Vdm2Spec& spec);

// Simpler bordered determinant for d_kappa = k1-k2-N >= 0 and
// d_lambda = l1-l2-N >= 0 (the two are independent).
cplx z_tilde_degenerate(const Vdm2Spec& spec);

// Dispatches between the two reductions; throws DimensionMismatch when
// neither applies.
cplx z_tilde_value(const Vdm2Spec& spec);

// Partition of the pole/root lists between the z-paired and conj(z)-paired
// families for Hermitian averages.
struct HermitianSplit {
    std::size_t k1 = 0, k2 = 0, l1 = 0, l2 = 0;
};

// Average of det-ratio products over NxN Hermitian matrices with eigenvalue
// density weight p, via the squared-Vandermonde reduction. A split may be
// given explicitly; otherwise the first admissible one is used.
cplx hermitian_ratio_average(const WeightFunction& p, std::size_t N,
                             const SpectralParameters& kappa,
                             std::optional<HermitianSplit> split = std::nullopt);

// Same average via the sqrt-Berezinian reduction with monomial-dressed
// one-point weights.
cplx hermitian_ratio_average_sqrtber(const WeightFunction& p, std::size_t N,
                                     const SpectralParameters& kappa);

// Enumerates all admissible splits for given totals.
std::vector<HermitianSplit> admissible_splits(std::size_t ktilde1, std::size_t ktilde2,
                                              std::size_t N);

}  // namespace rmt
