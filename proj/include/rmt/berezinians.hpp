#pragma once

#include <vector>

#include "rmt/matrix.hpp"

namespace rmt {

// Two families of spectral points: bosonic entries enter as poles, fermionic
// entries as roots of the generating functions.
struct SpectralParameters {
    std::vector<cplx> bosonic;
    std::vector<cplx> fermionic;
};

// Throws CoincidentPoints if any pair (within a list or across lists for the
// ratio forms) is closer than this.
inline constexpr double kMinSeparation = 1e-12;

// Product over a < b of (v_a - v_b). Empty and singleton lists give 1.
cplx vandermonde(const std::vector<cplx>& values);

// Ratio of Vandermonde products over the bosonic-fermionic cross product:
//   vandermonde(bosonic) * vandermonde(fermionic) / prod (kappa_a1 - kappa_b2).
cplx sqrt_ber2_product(const SpectralParameters& sp);

// Same quantity as a sign-prefactored determinant mixing Cauchy rows and
// monomial rows; for p > q the lists are exchanged with a (-1)^{pq} factor.
cplx sqrt_ber2_det(const SpectralParameters& sp);

// vandermonde(bosonic) * vandermonde(fermionic)^4 / cross product squared.
cplx ber1_product(const SpectralParameters& sp);

// Determinant form of ber1_product with Cauchy, squared-Cauchy, monomial and
// derivative-of-monomial entries; dispatches on p vs 2q.
cplx ber1_det(const SpectralParameters& sp);

}  // namespace rmt
