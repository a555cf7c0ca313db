#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "rmt/errors.hpp"
#include "rmt/matrix.hpp"

namespace rmt {

struct QuadratureResult {
    cplx value;
    double error_estimate;
};

// Adaptive 15-point Kronrod / 7-point Gauss quadrature on [a, b].
QuadratureResult integrate(const std::function<cplx(double)>& f, double a, double b,
                           double abs_tol = 1e-12, double rel_tol = 1e-11,
                           int max_subdivisions = 4000);

// Uniform trapezoid rule on [0, 2pi) for periodic integrands, with node
// doubling until converged (spectrally accurate).
QuadratureResult integrate_periodic(const std::function<cplx(double)>& f,
                                    double abs_tol = 1e-12, double rel_tol = 1e-11);

// Nested adaptive quadrature over an axis-aligned box of dimension <= 4.
QuadratureResult integrate_box(const std::function<cplx(const std::vector<double>&)>& f,
                               const std::vector<double>& lo, const std::vector<double>& hi,
                               double rel_tol = 1e-9);

// Integral over the ordered region lo <= e1 <= e2 <= hi.
QuadratureResult integrate_ordered_pair(const std::function<cplx(double, double)>& f,
                                        double lo, double hi, double rel_tol = 1e-9);

}  // namespace rmt
