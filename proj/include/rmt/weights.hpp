#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "rmt/matrix.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {

enum class Support { RealLine, HalfLine, Interval, UnitCircle, ComplexPlane };

// Scalar weight on a one-dimensional contour (or on the complex plane).
// One-dimensional weights are parameterized: z = point(t) for t in [lo, hi]
// with any Jacobian folded into density(t). Delta-constrained plane densities
// are represented directly on their support manifold.
struct WeightFunction {
    Support support = Support::RealLine;
    std::string label;

    std::function<cplx(double)> density;  // weight value at parameter t
    std::function<cplx(double)> point;    // contour point z(t)
    double lo = 0.0, hi = 0.0;
    bool periodic = false;

    // Genuinely two-dimensional case: density over a box in (x, y).
    std::function<cplx(double, double)> plane_density;
    double xlo = 0.0, xhi = 0.0, ylo = 0.0, yhi = 0.0;

    // Optional closed-form moments: (a, b) -> integral of w z^{a-1} conj(z)^{b-1}.
    std::function<cplx(int, int)> analytic_moments;

    bool is_plane() const { return support == Support::ComplexPlane; }
};

// Weight on the real axis shifted to the contour x + i*offset. Used to give
// double-Cauchy integrals a pole-free inner contour.
WeightFunction shifted_line_weight(std::function<cplx(double)> density, double lo, double hi,
                                   double imag_offset, std::string label = "shifted");

// Gaussian weight exp(-c x^2) on the real line, optional contour offset.
WeightFunction gaussian_weight(double c = 1.0, double imag_offset = 0.0);

// Laguerre-type weight x^nu exp(-c x) on the positive half line.
WeightFunction laguerre_weight(double nu, double c);

// Multiplies a weight by the real coordinate raised to a power.
WeightFunction monomial_times(const WeightFunction& w, int power);

// Catalog lookup driven by ensemble name and parameter map.
WeightFunction ensemble_weight(const std::string& name, const std::map<std::string, double>& params);

// Moment: integral of w(z) z^{a-1} conj(z)^{b-1}, a,b >= 1.
cplx moment(const WeightFunction& w, int a, int b);

// Cauchy transform with monomial insertions:
//   integral of w(z) z^{a-1} conj(z)^{b-1} / (pole - z)          (conjugate_pole = false)
//   integral of w(z) z^{a-1} conj(z)^{b-1} / (pole - conj(z))    (conjugate_pole = true)
cplx cauchy_transform(const WeightFunction& w, cplx pole, int a = 1, int b = 1,
                      bool conjugate_pole = false);

// Double Cauchy integral of w1(z1) w2(z2) / (z1 - z2) over both contours.
cplx double_cauchy(const WeightFunction& w1, const WeightFunction& w2);

// Integral of w(z) / ((kappa - z)(lambda - conj(z))).
cplx double_pole_transform(const WeightFunction& w, cplx kappa, cplx lambda);

enum class MomentKind { Bimoment, PlainSquare, SkewQuaternion, SkewRealOrdered };

struct MomentMatrix {
    ComplexMatrix entries;
    MomentKind kind;
    double condition_estimate = 0.0;
};

// Bimoment matrix [moment(a, b)] of size d x d.
MomentMatrix bimoment_matrix(const WeightFunction& w, std::size_t d);

// Plain square moment matrix with entries integral of w(E) (-E)^{m+n-2}.
MomentMatrix plain_moment_matrix(const WeightFunction& w, std::size_t d);

// Skew moment matrix with entries (n - m) * integral of w(E) (-E)^{m+n-3}.
MomentMatrix skew_quaternion_matrix(const WeightFunction& w, std::size_t d);

// Skew moment matrix over the ordered region E1 < E2 with pairing entries
// (-E1)^{n-1}(-E2)^{m-1} - (-E1)^{m-1}(-E2)^{n-1}; when bordered is true the
// matrix is extended by one +/- moment-vector row and column.
MomentMatrix skew_real_ordered_matrix(const WeightFunction& w, std::size_t dim, bool bordered);

// Minimum pole-to-support separation accepted by the Cauchy transforms.
inline constexpr double kPoleSeparation = 1e-8;

double distance_to_support(const WeightFunction& w, cplx pole, bool conjugate_pole = false);

}  // namespace rmt
