#include "rmt/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rmt {

namespace {

constexpr double kPi = std::numbers::pi;

double tgamma_half(int n) {
    // Gamma((n + 1) / 2) for n >= 0.
    return std::tgamma(0.5 * (n + 1));
}

// Integral over the weight's contour of density(t) * f(z(t)).
cplx contour_integral(const WeightFunction& w, const std::function<cplx(cplx, double)>& f,
                      double rel_tol = 1e-11) {
    if (w.is_plane()) {
        QuadratureResult r = integrate_box(
            [&](const std::vector<double>& p) {
                const cplx z(p[0], p[1]);
                return w.plane_density(p[0], p[1]) * f(z, 0.0);
            },
            {w.xlo, w.ylo}, {w.xhi, w.yhi}, std::max(rel_tol, 1e-9));
        return r.value;
    }
    auto integrand = [&](double t) { return w.density(t) * f(w.point(t), t); };
    if (w.periodic) return integrate_periodic(integrand).value;
    return integrate(integrand, w.lo, w.hi, 1e-14, rel_tol).value;
}

std::pair<double, double> expand_bounds(const std::function<double(double)>& density,
                                        double center, double width) {
    double peak = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double x = center - width + 2.0 * width * i / 200.0;
        peak = std::max(peak, density(x));
    }
    double lo = center - width, hi = center + width;
    const double cut = 1e-16 * peak;
    while (density(hi) > cut && hi - center < 1e6) hi += width * 0.25;
    while (density(lo) > cut && center - lo < 1e6) lo -= width * 0.25;
    return {lo, hi};
}

}  // namespace

WeightFunction shifted_line_weight(std::function<cplx(double)> density, double lo, double hi,
                                   double imag_offset, std::string label) {
    WeightFunction w;
    w.support = Support::RealLine;
    w.label = std::move(label);
    w.density = std::move(density);
    w.point = [imag_offset](double t) { return cplx(t, imag_offset); };
    w.lo = lo;
    w.hi = hi;
    return w;
}

WeightFunction gaussian_weight(double c, double imag_offset) {
    if (c <= 0.0) throw InvalidParameter("gaussian weight needs c > 0");
    const double bound = std::sqrt(39.0 / c);
    WeightFunction w = shifted_line_weight(
        [c](double t) { return cplx(std::exp(-c * t * t)); }, -bound, bound, imag_offset,
        "gaussian");
    if (imag_offset == 0.0) {
        w.analytic_moments = [c](int a, int b) -> cplx {
            const int n = a + b - 2;
            if (n % 2 == 1) return cplx(0.0);
            return cplx(tgamma_half(n) / std::pow(c, 0.5 * (n + 1)));
        };
    }
    return w;
}

WeightFunction laguerre_weight(double nu, double c) {
    if (nu <= -1.0 || c <= 0.0) throw InvalidParameter("laguerre weight needs nu > -1, c > 0");
    WeightFunction w;
    w.support = Support::HalfLine;
    w.label = "laguerre";
    w.density = [nu, c](double t) {
        if (t <= 0.0) return cplx(0.0);
        return cplx(std::pow(t, nu) * std::exp(-c * t));
    };
    w.point = [](double t) { return cplx(t, 0.0); };
    w.lo = 0.0;
    w.hi = (45.0 + nu + 10.0 * std::sqrt(nu + 1.0)) / c;
    w.analytic_moments = [nu, c](int a, int b) -> cplx {
        const int n = a + b - 2;
        return cplx(std::tgamma(n + nu + 1.0) / std::pow(c, n + nu + 1.0));
    };
    return w;
}

WeightFunction monomial_times(const WeightFunction& w, int power) {
    if (power == 0) return w;
    WeightFunction out = w;
    out.analytic_moments = nullptr;
    if (w.analytic_moments)
        out.analytic_moments = [base = w.analytic_moments, power](int a, int b) {
            return base(a + power, b);
        };
    if (w.is_plane()) {
        out.plane_density = [base = w.plane_density, power](double x, double y) {
            return base(x, y) * std::pow(cplx(x, y), power);
        };
        return out;
    }
    out.density = [w, power](double t) { return w.density(t) * std::pow(w.point(t), power); };
    return out;
}

WeightFunction ensemble_weight(const std::string& name,
                               const std::map<std::string, double>& params) {
    auto get = [&](const std::string& key, double fallback) {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    };
    if (name == "gaussian" || name == "gue" || name == "hermitian")
        return gaussian_weight(get("c", 1.0));
    if (name == "laguerre") return laguerre_weight(get("nu", 0.0), get("c", 1.0));
    if (name == "chiral") {
        const double mn = get("M", get("N", 0.0)) - get("N", 0.0);
        if (mn < 0.0) throw InvalidParameter("chiral ensemble needs M >= N");
        return laguerre_weight(mn, get("c", 1.0));
    }
    if (name == "circular" || name == "cue") {
        WeightFunction w;
        w.support = Support::UnitCircle;
        w.label = "circular";
        w.density = [](double) { return cplx(1.0); };
        w.point = [](double phi) { return std::polar(1.0, phi); };
        w.lo = 0.0;
        w.hi = 2.0 * kPi;
        w.periodic = true;
        w.analytic_moments = [](int a, int b) {
            return a == b ? cplx(2.0 * kPi) : cplx(0.0);
        };
        return w;
    }
    if (name == "ginibre" || name == "elliptic-ginibre") {
        const double tau = get("tau", 1.0);
        if (tau <= 0.0) throw InvalidParameter("elliptic ensemble needs tau > 0");
        WeightFunction w;
        w.support = Support::ComplexPlane;
        w.label = "ginibre";
        w.plane_density = [tau](double x, double y) {
            return cplx(std::exp(-(y * y + tau * x * x)));
        };
        w.xlo = -std::sqrt(39.0 / tau);
        w.xhi = std::sqrt(39.0 / tau);
        w.ylo = -std::sqrt(39.0);
        w.yhi = std::sqrt(39.0);
        return w;
    }
    if (name == "osborn") {
        const double nu = get("nu", 0.0);
        const double mu = get("mu", 1.0);
        if (mu <= 0.0 || nu < 0.0) throw InvalidParameter("two-matrix ensemble needs mu > 0, nu >= 0");
        const double acoef = (1.0 + mu * mu) / (2.0 * mu * mu);
        const double bcoef = (1.0 - mu * mu) / (2.0 * mu * mu);
        const double decay = acoef - std::abs(bcoef);
        const double radius = (45.0 + nu) / decay;
        WeightFunction w;
        w.support = Support::ComplexPlane;
        w.label = "osborn";
        w.plane_density = [acoef, bcoef, nu](double x, double y) -> cplx {
            const double r = std::hypot(x, y);
            if (r == 0.0) return cplx(nu == 0.0 ? 1e300 : 0.0);
            return cplx(std::cyl_bessel_k(nu, acoef * r) * std::pow(r, nu) *
                        std::exp(bcoef * x));
        };
        w.xlo = -radius;
        w.xhi = radius;
        w.ylo = -radius;
        w.yhi = radius;
        // Normalization pinned by a unit zeroth moment.
        const cplx norm = moment(w, 1, 1);
        auto base = w.plane_density;
        w.plane_density = [base, norm](double x, double y) { return base(x, y) / norm; };
        return w;
    }
    if (name == "antisymmetric") {
        const double chi = get("chi", 0.0);
        const double c = get("c", 1.0);
        if (chi != 0.0 && chi != 1.0) throw InvalidParameter("chi must be 0 or 1");
        return laguerre_weight(chi - 0.5, c);
    }
    if (name == "anti-selfdual") return laguerre_weight(0.5, get("c", 1.0));
    if (name == "so-group" || name == "usp-group") {
        const double chi = get("chi", 0.0);
        if (chi != 0.0 && chi != 1.0) throw InvalidParameter("chi must be 0 or 1");
        const bool so = name == "so-group";
        WeightFunction w;
        w.support = Support::Interval;
        w.label = name;
        // Parameterize x = cos(theta); the endpoint factors become smooth.
        w.density = [so, chi](double theta) -> cplx {
            const double s = std::sin(theta);
            if (so) return cplx(std::pow(std::abs(1.0 - std::cos(theta)), chi));
            return cplx(s * s);
        };
        w.point = [](double theta) { return cplx(std::cos(theta), 0.0); };
        w.lo = 0.0;
        w.hi = kPi;
        return w;
    }
    throw InvalidParameter("unknown ensemble name: " + name);
}

cplx moment(const WeightFunction& w, int a, int b) {
    if (a < 1 || b < 1) throw UnsupportedOrder("moment orders must be >= 1");
    if (w.analytic_moments) return w.analytic_moments(a, b);
    return contour_integral(w, [a, b](cplx z, double) {
        return std::pow(z, a - 1) * std::pow(std::conj(z), b - 1);
    });
}

double distance_to_support(const WeightFunction& w, cplx pole, bool conjugate_pole) {
    double best = 1e300;
    if (w.is_plane()) {
        const double x = std::clamp(pole.real(), w.xlo, w.xhi);
        const double y = std::clamp(conjugate_pole ? -pole.imag() : pole.imag(), w.ylo, w.yhi);
        return std::abs(pole - (conjugate_pole ? std::conj(cplx(x, y)) : cplx(x, y)));
    }
    constexpr int kSamples = 512;
    auto dist = [&](double t) {
        cplx z = w.point(t);
        if (conjugate_pole) z = std::conj(z);
        return std::abs(pole - z);
    };
    int best_i = 0;
    for (int i = 0; i <= kSamples; ++i) {
        const double d = dist(w.lo + (w.hi - w.lo) * i / kSamples);
        if (d < best) {
            best = d;
            best_i = i;
        }
    }
    // Ternary refinement around the best sample so that poles between grid
    // points are still detected.
    double a = w.lo + (w.hi - w.lo) * std::max(0, best_i - 1) / kSamples;
    double b = w.lo + (w.hi - w.lo) * std::min(kSamples, best_i + 1) / kSamples;
    for (int it = 0; it < 80 && b - a > 0.0; ++it) {
        const double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
        if (dist(m1) < dist(m2))
            b = m2;
        else
            a = m1;
    }
    return std::min(best, dist(0.5 * (a + b)));
}

cplx cauchy_transform(const WeightFunction& w, cplx pole, int a, int b, bool conjugate_pole) {
    if (distance_to_support(w, pole, conjugate_pole) < kPoleSeparation)
        throw PoleOnSupport("pole too close to the weight support");
    return contour_integral(
        w,
        [&](cplx z, double) {
            const cplx mono = std::pow(z, a - 1) * std::pow(std::conj(z), b - 1);
            return mono / (pole - (conjugate_pole ? std::conj(z) : z));
        },
        1e-10);
}

cplx double_cauchy(const WeightFunction& w1, const WeightFunction& w2) {
    return contour_integral(
        w1, [&](cplx z1, double) { return cauchy_transform(w2, z1); }, 1e-8);
}

cplx double_pole_transform(const WeightFunction& w, cplx kappa, cplx lambda) {
    if (distance_to_support(w, kappa, false) < kPoleSeparation ||
        distance_to_support(w, lambda, true) < kPoleSeparation)
        throw PoleOnSupport("pole too close to the weight support");
    return contour_integral(
        w,
        [&](cplx z, double) {
            return 1.0 / ((kappa - z) * (lambda - std::conj(z)));
        },
        1e-10);
}

namespace {

double estimate_condition(const ComplexMatrix& m) {
    if (m.rows() == 0) return 1.0;
    try {
        return solve(m, ComplexMatrix::identity(m.rows())).condition_estimate;
    } catch (const SingularBlock&) {
        return kSingularConditionThreshold;
    }
}

}  // namespace

MomentMatrix bimoment_matrix(const WeightFunction& w, std::size_t d) {
    ComplexMatrix m(d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            m(a, b) = moment(w, static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    return {m, MomentKind::Bimoment, estimate_condition(m)};
}

MomentMatrix plain_moment_matrix(const WeightFunction& w, std::size_t d) {
    ComplexMatrix m(d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const int n = static_cast<int>(a + b);
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            m(a, b) = sign * moment(w, n + 1, 1);
        }
    return {m, MomentKind::PlainSquare, estimate_condition(m)};
}

MomentMatrix skew_quaternion_matrix(const WeightFunction& w, std::size_t d) {
    ComplexMatrix m(d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            if (a == b) continue;
            const int n = static_cast<int>(a + b) - 1;  // power of (-E): a+b-3 with 1-based
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            m(a, b) = (static_cast<double>(b) - static_cast<double>(a)) * sign *
                      moment(w, n + 1, 1);
        }
    return {m, MomentKind::SkewQuaternion, estimate_condition(m)};
}

MomentMatrix skew_real_ordered_matrix(const WeightFunction& w, std::size_t dim, bool bordered) {
    const std::size_t full = dim + (bordered ? 1 : 0);
    ComplexMatrix m(full, full);
    auto signed_pow = [](double e, int p) { return std::pow(-e, p); };
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a + 1; b < dim; ++b) {
            QuadratureResult r = integrate_ordered_pair(
                [&](double e1, double e2) {
                    return w.density(e1) * w.density(e2) *
                           (signed_pow(e1, static_cast<int>(b)) * signed_pow(e2, static_cast<int>(a)) -
                            signed_pow(e1, static_cast<int>(a)) * signed_pow(e2, static_cast<int>(b)));
                },
                w.lo, w.hi);
            m(a, b) = r.value;
            m(b, a) = -r.value;
        }
    if (bordered) {
        for (std::size_t a = 0; a < dim; ++a) {
            const int n = static_cast<int>(a);
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            const cplx mom = sign * moment(w, n + 1, 1);
            m(a, full - 1) = -mom;
            m(full - 1, a) = mom;
        }
    }
    return {m, MomentKind::SkewRealOrdered, estimate_condition(m)};
}

}  // namespace rmt
