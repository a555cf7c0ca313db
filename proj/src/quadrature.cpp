#include "rmt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace rmt {

namespace {

// 15-point Kronrod nodes/weights on [-1, 1] with embedded 7-point Gauss rule.
constexpr double kKronrodNodes[15] = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

constexpr double kKronrodWeights[15] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

constexpr double kGaussWeights[7] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct Segment {
    double a, b;
    cplx value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment evaluate_segment(const std::function<cplx(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    cplx kronrod(0.0), gauss(0.0);
    for (int i = 0; i < 15; ++i) {
        const cplx fx = f(mid + half * kKronrodNodes[i]);
        kronrod += kKronrodWeights[i] * fx;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fx;
    }
    kronrod *= half;
    gauss *= half;
    const double diff = std::abs(kronrod - gauss);
    return {a, b, kronrod, std::pow(200.0 * diff, 1.5)};
}

}  // namespace

QuadratureResult integrate(const std::function<cplx(double)>& f, double a, double b,
                           double abs_tol, double rel_tol, int max_subdivisions) {
    if (a == b) return {cplx(0.0), 0.0};
    std::priority_queue<Segment> segments;
    // Seeding with a few segments avoids fooling the error estimator on
    // integrands that vanish on most of the initial interval.
    constexpr int kSeed = 8;
    cplx total(0.0);
    double total_err = 0.0;
    for (int i = 0; i < kSeed; ++i) {
        Segment s = evaluate_segment(f, a + (b - a) * i / kSeed, a + (b - a) * (i + 1) / kSeed);
        total += s.value;
        total_err += s.error;
        segments.push(s);
    }
    int splits = 0;
    while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (splits++ > max_subdivisions)
            throw NonConvergentQuadrature("adaptive quadrature failed to converge");
        Segment worst = segments.top();
        segments.pop();
        if (worst.b - worst.a < 1e-15 * (std::abs(worst.a) + std::abs(worst.b) + 1.0)) {
            // Interval exhausted at machine resolution; accept its estimate.
            if (segments.empty()) break;
            Segment next = segments.top();
            if (next.error <= worst.error) break;
            segments.push(worst);
            continue;
        }
        total -= worst.value;
        total_err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = evaluate_segment(f, worst.a, mid);
        Segment right = evaluate_segment(f, mid, worst.b);
        total += left.value + right.value;
        total_err += left.error + right.error;
        segments.push(left);
        segments.push(right);
    }
    return {total, total_err};
}

QuadratureResult integrate_periodic(const std::function<cplx(double)>& f, double abs_tol,
                                    double rel_tol) {
    const double two_pi = 2.0 * std::acos(-1.0);
    int n = 16;
    cplx prev(0.0);
    for (int i = 0; i < n; ++i) prev += f(two_pi * i / n);
    prev *= two_pi / n;
    for (int iter = 0; iter < 14; ++iter) {
        // Reuse previous nodes: the doubled rule adds the midpoints.
        cplx odd(0.0);
        for (int i = 0; i < n; ++i) odd += f(two_pi * (i + 0.5) / n);
        const cplx cur = 0.5 * (prev + odd * (two_pi / n));
        n *= 2;
        const double diff = std::abs(cur - prev);
        prev = cur;
        if (diff < std::max(abs_tol, rel_tol * std::abs(cur))) return {cur, diff};
    }
    return {prev, std::abs(prev) * 1e-10};
}

QuadratureResult integrate_box(const std::function<cplx(const std::vector<double>&)>& f,
                               const std::vector<double>& lo, const std::vector<double>& hi,
                               double rel_tol) {
    if (lo.size() != hi.size()) throw DimensionMismatch("integration box shape mismatch");
    const std::size_t dim = lo.size();
    if (dim == 0) return {f({}), 0.0};
    if (dim > 4) throw DimensionTooLarge("direct quadrature limited to dimension 4");
    // Inner dimensions get progressively looser tolerances; the outer
    // adaptive pass controls the final error.
    std::vector<double> point(dim);
    std::function<cplx(std::size_t)> nest = [&](std::size_t level) -> cplx {
        const double tol = rel_tol * std::pow(0.3, static_cast<double>(dim - 1 - level));
        QuadratureResult r = integrate(
            [&](double x) {
                point[level] = x;
                if (level + 1 == dim) return f(point);
                return nest(level + 1);
            },
            lo[level], hi[level], 1e-14, tol, 2000);
        return r.value;
    };
    cplx value = nest(0);
    return {value, std::abs(value) * rel_tol};
}

QuadratureResult integrate_ordered_pair(const std::function<cplx(double, double)>& f,
                                        double lo, double hi, double rel_tol) {
    QuadratureResult outer = integrate(
        [&](double e2) {
            return integrate([&](double e1) { return f(e1, e2); }, lo, e2, 1e-14,
                             rel_tol * 0.3, 2000)
                .value;
        },
        lo, hi, 1e-14, rel_tol, 2000);
    return outer;
}

}  // namespace rmt
