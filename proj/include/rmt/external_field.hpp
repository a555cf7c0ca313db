#pragma once

#include <cstddef>
#include <vector>

#include "rmt/matrix.hpp"
#include "rmt/weights.hpp"

namespace rmt {

enum class FactorKind { Gaussian, Laguerre };

// One-point factor of the ensemble: Gaussian weight exp(-c x^2) on the real
// line or Laguerre weight x^nu exp(-c x) on the half line. The rotation angle
// is a recorded contour convention only; every implemented closed form is
// independent of it.
struct CharacteristicFactor {
    FactorKind kind = FactorKind::Gaussian;
    double c = 1.0;
    double nu = 0.0;
    double rotation_angle = 1.5707963267948966;
};

// Ensemble shifted by a fixed source matrix: H + alpha * H0, where H0 has the
// given eigenvalues. alpha = 0 selects the source-free limit path.
struct ExternalFieldSpec {
    std::size_t N = 0;
    double alpha = 0.0;
    std::vector<double> field_eigenvalues;
    CharacteristicFactor ensemble;
};

// Christoffel-Darboux kernel of the source-free ensemble, built from monic
// orthogonal polynomials with the weight attached to the first argument;
// the diagonal uses the derivative form.
double cd_kernel(const CharacteristicFactor& ens, std::size_t N, double x, double y);

// Two-point entry of the source-coupled determinant (Christoffel-Darboux
// combination scaled by 2*pi*(-i)^(N-1)*(N-1)!).
cplx r1_entry(const ExternalFieldSpec& spec, double x_a, double x_b);

// Source-column entry; field_value is the unscaled source eigenvalue E_b.
cplx r2_entry(const ExternalFieldSpec& spec, double field_value, double x_a);

// Derivative of r2_entry with respect to the unscaled source eigenvalue.
cplx r2_entry_derivative(const ExternalFieldSpec& spec, double field_value, double x_a);

// Monic-polynomial row entry, 1 <= a <= N.
cplx r3_entry(const ExternalFieldSpec& spec, std::size_t a, double x_b);

// k-point correlation function at fixed source. Caches the scale constant
// pinned by the one-point normalization integral, so grid evaluation reuses
// it.
class ExternalFieldKernel {
  public:
    explicit ExternalFieldKernel(ExternalFieldSpec spec);

    // Normalized R_k at the given points (k <= N).
    cplx rk(const std::vector<double>& points) const;

    // Determinant-over-Vandermonde value before normalization.
    cplx raw_rk(const std::vector<double>& points) const;

    // Scale constant inferred from the one-point integral (alpha != 0 only).
    cplx scale_constant() const { return chat_; }

    // Integration window covering the support of the one-point density.
    void density_window(double& lo, double& hi) const;

  private:
    ExternalFieldSpec spec_;
    cplx delta_{1.0};
    cplx chat_{1.0};
};

cplx rk_correlation(const ExternalFieldSpec& spec, const std::vector<double>& points);

enum class SourceKind { Unitary, Quaternion, RealSymmetric };

// Random source matrix H0 drawn from a factorizing eigenvalue density.
struct SourceEnsemble {
    SourceKind kind = SourceKind::Unitary;
    WeightFunction density;
};

// k-point correlation function with the source averaged over its own
// ensemble: a k x k determinant kernel for a unitary-class source, a 2k x 2k
// Pfaffian for quaternion (N even) or real symmetric sources.
class IntermediateKernel {
  public:
    IntermediateKernel(ExternalFieldSpec spec, SourceEnsemble source);

    cplx rk(const std::vector<double>& points) const;

    // Unitary-class kernel entry (throws for Pfaffian kinds).
    cplx kernel_entry(double x_a, double x_b) const;

    // Assembled antisymmetric 2k x 2k matrix (throws for the unitary kind).
    ComplexMatrix pfaffian_matrix(const std::vector<double>& points) const;

    cplx scale_constant() const;

  private:
    cplx source_average(const std::function<cplx(double)>& f) const;
    cplx source_average_ordered(const std::function<cplx(double, double)>& f) const;
    std::vector<cplx> r3_vector(double x) const;
    std::vector<cplx> pair_vector(double x) const;
    cplx pair_kernel(double x_a, double x_b) const;
    cplx k1(double x_a, double x_b) const;
    cplx k2(double x_a, double x_b) const;
    cplx k3(double x_a, double x_b) const;

    ExternalFieldSpec spec_;
    SourceEnsemble source_;
    ComplexMatrix minv_;
    std::size_t mdim_ = 0;
    bool bordered_ = false;
    double window_lo_ = 0.0, window_hi_ = 0.0;
    mutable bool scaled_ = false;
    mutable cplx chat_{1.0};
};

cplx rk_intermediate(const ExternalFieldSpec& spec, const SourceEnsemble& source,
                     const std::vector<double>& points);

}  // namespace rmt
