#include "rmt/sqrtber.hpp"

#include <cmath>

namespace rmt {

namespace {

double parity_sign(std::size_t exponent) { return exponent % 2 == 0 ? 1.0 : -1.0; }

double factorial(std::size_t n) { return std::tgamma(static_cast<double>(n) + 1.0); }

cplx power_int(cplx base, std::size_t e) {
    cplx out(1.0);
    for (std::size_t i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

SqrtBerKernel::SqrtBerKernel(const SqrtBerSpec& spec)
    : g_(spec.g_weights), f_(spec.f_weights), minv_(0, 0) {
    if (f_.size() < g_.size())
        throw InvalidParameter("kernel requires at least as many f weights as g weights");
    const std::size_t n2 = f_.size();
    const std::size_t gap = n2 - g_.size();
    ComplexMatrix m(n2, n2);
    for (std::size_t b = 0; b < n2; ++b) {
        for (std::size_t a = 0; a < gap; ++a)
            m(a, b) = moment(f_[b], static_cast<int>(a) + 1, 1);
        for (std::size_t j = 0; j < g_.size(); ++j)
            m(gap + j, b) = double_cauchy(g_[j], f_[b]);
    }
    detm_ = determinant(m);
    try {
        minv_ = solve(m, ComplexMatrix::identity(n2)).solution;
    } catch (const SingularBlock&) {
        throw SingularMomentMatrix("moment matrix is numerically singular");
    }
}

cplx SqrtBerKernel::normalization() const {
    return parity_sign(n2() * (n2() - 1) / 2) * detm_;
}

ComplexMatrix SqrtBerKernel::g_column(cplx kappa2) const {
    const std::size_t gap = n2() - n1();
    ComplexMatrix col(n2(), 1);
    for (std::size_t a = 0; a < gap; ++a) col(a, 0) = power_int(kappa2, a);
    for (std::size_t j = 0; j < n1(); ++j)
        col(gap + j, 0) = -cauchy_transform(g_[j], kappa2);
    return col;
}

ComplexMatrix SqrtBerKernel::f_row(cplx kappa1) const {
    ComplexMatrix row(1, n2());
    for (std::size_t b = 0; b < n2(); ++b) row(0, b) = cauchy_transform(f_[b], kappa1);
    return row;
}

cplx SqrtBerKernel::kernel(cplx kappa1, cplx kappa2) const {
    cplx correction(0.0);
    if (n2() > 0) correction = (f_row(kappa1) * minv_ * g_column(kappa2))(0, 0);
    return 1.0 / (kappa1 - kappa2) - correction;
}

cplx SqrtBerKernel::z11(cplx kappa1, cplx kappa2) const {
    return parity_sign(n2() * (n2() + 1) / 2) * detm_ * (kappa1 - kappa2) *
           kernel(kappa1, kappa2);
}

ComplexMatrix SqrtBerKernel::f_moment_row(std::size_t a) const {
    const std::size_t gap = n2() - n1();
    ComplexMatrix row(1, n2());
    for (std::size_t b = 0; b < n2(); ++b)
        row(0, b) = moment(f_[b], static_cast<int>(a + gap), 1);
    return row;
}

ComplexMatrix SqrtBerKernel::g_moment_column(std::size_t a) const {
    const std::size_t gap = n2() - n1();
    ComplexMatrix col(n2(), 1);
    for (std::size_t b = 0; b < gap; ++b)
        col(b, 0) = (gap + 1 - a == b + 1) ? cplx(-1.0) : cplx(0.0);
    // Exponent a - 1 - gap is nonnegative exactly when the discrete step
    // function keeps the term; otherwise the entry vanishes.
    const bool keep = a >= gap + 1;
    for (std::size_t j = 0; j < n1(); ++j)
        col(gap + j, 0) = keep ? moment(g_[j], static_cast<int>(a - gap), 1) : cplx(0.0);
    return col;
}

cplx z_equal(const SqrtBerSpec& spec, bool block_form) {
    const std::size_t k = spec.sp.bosonic.size();
    if (k != spec.sp.fermionic.size())
        throw DimensionMismatch("equal-size path requires k1 == k2");
    SqrtBerKernel ker(spec);
    if (k == 0) return ker.normalization();
    ComplexMatrix m(k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            const cplx ka = spec.sp.bosonic[a];
            const cplx kb = spec.sp.fermionic[b];
            m(a, b) = block_form ? ker.kernel(ka, kb) : ker.z11(ka, kb) / (ka - kb);
        }
    const cplx ber = sqrt_ber2_product(spec.sp);
    if (block_form) {
        const std::size_t n2 = ker.n2();
        return parity_sign((n2 + k) * (n2 + k - 1) / 2) * ker.det_moment() / ber *
               determinant(m);
    }
    cplx cpow(1.0);
    for (std::size_t i = 0; i + 1 < k; ++i) cpow *= ker.normalization();
    return parity_sign(k * (k - 1) / 2) / (cpow * ber) * determinant(m);
}

cplx z_unequal(const SqrtBerSpec& spec) {
    const std::size_t k1 = spec.sp.bosonic.size();
    const std::size_t k2 = spec.sp.fermionic.size();
    if (k1 == k2) throw DimensionMismatch("unequal-size path requires k1 != k2");
    SqrtBerKernel ker(spec);
    const std::size_t n1 = ker.n1(), n2 = ker.n2();
    const cplx c = ker.normalization();
    const cplx ber = sqrt_ber2_product(spec.sp);
    const std::size_t k = std::max(k1, k2);
    ComplexMatrix m(k, k);
    cplx cpow(1.0);
    for (std::size_t i = 0; i + 1 < k; ++i) cpow *= c;
    if (k1 < k2) {
        for (std::size_t b = 0; b < k2; ++b) {
            const cplx kb = spec.sp.fermionic[b];
            for (std::size_t a = 0; a < k1; ++a) {
                const cplx ka = spec.sp.bosonic[a];
                m(a, b) = ker.z11(ka, kb) / (ka - kb);
            }
            ComplexMatrix gcol = ker.g_column(kb);
            for (std::size_t a = k1; a < k2; ++a) {
                const std::size_t la = a - k1 + 1;  // limit-row index
                const cplx corr =
                    n2 > 0 ? (ker.f_moment_row(la) * ker.moment_inverse() * gcol)(0, 0)
                           : cplx(0.0);
                m(a, b) = parity_sign(la - 1 + n2) * factorial(la - 1) * c *
                          (power_int(kb, la - 1 + n2 - n1) - corr);
            }
        }
        return parity_sign(k1 * (k1 - 1) / 2 + (k2 - k1) * n1) / (cpow * ber) *
               determinant(m);
    }
    for (std::size_t b = 0; b < k1; ++b) {
        const cplx kb = spec.sp.bosonic[b];
        for (std::size_t a = 0; a < k2; ++a) {
            const cplx ka = spec.sp.fermionic[a];
            m(a, b) = ker.z11(kb, ka) / (kb - ka);
        }
        ComplexMatrix frow = ker.f_row(kb);
        for (std::size_t a = k2; a < k1; ++a) {
            const std::size_t la = a - k2 + 1;
            const cplx corr =
                n2 > 0 ? (frow * ker.moment_inverse() * ker.g_moment_column(la))(0, 0)
                       : cplx(0.0);
            const bool keep = la + n1 >= n2 + 1;  // discrete step at la-1+n1-n2
            const cplx mono = keep ? power_int(kb, la - 1 + n1 - n2) : cplx(0.0);
            m(a, b) = parity_sign(la + n2) * factorial(la - 1) * c * (mono - corr);
        }
    }
    return parity_sign((k2 + 2 * k1) * (k2 - 1) / 2 + (k1 - k2) * (n2 - n1)) /
           (cpow * ber) * determinant(m);
}

cplx z_value(const SqrtBerSpec& spec) {
    if (spec.g_weights.size() > spec.f_weights.size()) {
        // Role exchange: relabel the two integration families. The integrand
        // picks up one sign per exchanged pairing.
        SqrtBerSpec swapped{spec.f_weights, spec.g_weights,
                            {spec.sp.fermionic, spec.sp.bosonic}};
        const std::size_t e = spec.sp.bosonic.size() * spec.f_weights.size() +
                              spec.sp.fermionic.size() * spec.g_weights.size() +
                              spec.g_weights.size() * spec.f_weights.size();
        return parity_sign(e) * z_value(swapped);
    }
    if (spec.sp.bosonic.size() == spec.sp.fermionic.size()) return z_equal(spec);
    return z_unequal(spec);
}

}  // namespace rmt
