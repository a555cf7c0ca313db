#include "rmt/berezinians.hpp"

#include <cmath>

#include "rmt/errors.hpp"

namespace rmt {

namespace {

void check_separation(const SpectralParameters& sp, bool cross) {
    auto check_list = [](const std::vector<cplx>& v) {
        for (std::size_t a = 0; a < v.size(); ++a)
            for (std::size_t b = a + 1; b < v.size(); ++b)
                if (std::abs(v[a] - v[b]) < kMinSeparation)
                    throw CoincidentPoints("coincident spectral points");
    };
    check_list(sp.bosonic);
    check_list(sp.fermionic);
    if (!cross) return;
    for (const cplx& x : sp.bosonic)
        for (const cplx& y : sp.fermionic)
            if (std::abs(x - y) < kMinSeparation)
                throw CoincidentPoints("bosonic point coincides with fermionic point");
}

double parity_sign(std::size_t exponent) { return exponent % 2 == 0 ? 1.0 : -1.0; }

cplx cross_product(const SpectralParameters& sp, int power) {
    cplx prod(1.0);
    for (const cplx& x : sp.bosonic)
        for (const cplx& y : sp.fermionic)
            prod *= (power == 1) ? (x - y) : (x - y) * (x - y);
    return prod;
}

}  // namespace

cplx vandermonde(const std::vector<cplx>& values) {
    cplx prod(1.0);
    for (std::size_t a = 0; a < values.size(); ++a)
        for (std::size_t b = a + 1; b < values.size(); ++b) prod *= values[a] - values[b];
    return prod;
}

cplx sqrt_ber2_product(const SpectralParameters& sp) {
    check_separation(sp, true);
    return vandermonde(sp.bosonic) * vandermonde(sp.fermionic) / cross_product(sp, 1);
}

cplx sqrt_ber2_det(const SpectralParameters& sp) {
    check_separation(sp, true);
    const std::size_t p = sp.bosonic.size();
    const std::size_t q = sp.fermionic.size();
    if (p > q) {
        SpectralParameters swapped{sp.fermionic, sp.bosonic};
        return parity_sign(p * q) * sqrt_ber2_det(swapped);
    }
    // q x q determinant: p Cauchy rows over the bosonic points, then q - p
    // monomial rows in the fermionic points. Entries are built in extended
    // precision to keep the elimination accurate for large q.
    using lcplx = std::complex<long double>;
    std::vector<lcplx> m(q * q);
    for (std::size_t b = 0; b < q; ++b) {
        const lcplx fb(sp.fermionic[b].real(), sp.fermionic[b].imag());
        for (std::size_t a = 0; a < p; ++a) {
            const lcplx ba(sp.bosonic[a].real(), sp.bosonic[a].imag());
            m[a * q + b] = lcplx(1.0L) / (ba - fb);
        }
        lcplx pw(1.0L);
        for (std::size_t a = p; a < q; ++a) {
            m[a * q + b] = pw;
            pw *= fb;
        }
    }
    return parity_sign(q * (q - 1) / 2 + (q + 1) * p) * determinant(q, m);
}

cplx ber1_product(const SpectralParameters& sp) {
    check_separation(sp, true);
    const cplx vf = vandermonde(sp.fermionic);
    return vandermonde(sp.bosonic) * vf * vf * vf * vf / cross_product(sp, 2);
}

cplx ber1_det(const SpectralParameters& sp) {
    check_separation(sp, true);
    const std::size_t p = sp.bosonic.size();
    const std::size_t q = sp.fermionic.size();
    // Entries are built in extended precision to keep the elimination accurate
    // for the larger mixed Cauchy / monomial matrices.
    using lcplx = std::complex<long double>;
    auto lift = [](const cplx& z) { return lcplx(z.real(), z.imag()); };
    if (p <= 2 * q) {
        // (2q) x (2q): p rows of paired Cauchy / squared-Cauchy entries, then
        // 2q - p rows of paired monomial / monomial-derivative entries.
        const std::size_t n = 2 * q;
        std::vector<lcplx> m(n * n);
        for (std::size_t b = 0; b < q; ++b) {
            const lcplx fb = lift(sp.fermionic[b]);
            for (std::size_t a = 0; a < p; ++a) {
                const lcplx diff = lift(sp.bosonic[a]) - fb;
                m[a * n + b] = lcplx(1.0L) / diff;
                m[a * n + q + b] = lcplx(1.0L) / (diff * diff);
            }
            lcplx pw(1.0L), pw_prev(0.0L);
            for (std::size_t a = p; a < n; ++a) {
                const std::size_t deg = a - p;
                m[a * n + b] = pw;
                m[a * n + q + b] =
                    deg == 0 ? lcplx(0.0L) : static_cast<long double>(deg) * pw_prev;
                pw_prev = pw;
                pw *= fb;
            }
        }
        return parity_sign(p + q * (q - 1) / 2) * determinant(n, m);
    }
    // p x p: 2q columns of paired Cauchy / squared-Cauchy entries, then
    // p - 2q monomial columns in the bosonic points.
    std::vector<lcplx> m(p * p);
    for (std::size_t a = 0; a < p; ++a) {
        const lcplx ba = lift(sp.bosonic[a]);
        for (std::size_t b = 0; b < q; ++b) {
            const lcplx diff = ba - lift(sp.fermionic[b]);
            m[a * p + b] = lcplx(1.0L) / diff;
            m[a * p + q + b] = lcplx(1.0L) / (diff * diff);
        }
        lcplx pw(1.0L);
        for (std::size_t b = 2 * q; b < p; ++b) {
            m[a * p + b] = pw;
            pw *= ba;
        }
    }
    return parity_sign(p * (p - 1) / 2 + q + q * (q - 1) / 2) * determinant(p, m);
}

}  // namespace rmt
