#include "rmt/vdm2.hpp"

#include <cmath>

namespace rmt {

namespace {

double parity_sign(long long exponent) {
    return ((exponent % 2) + 2) % 2 == 0 ? 1.0 : -1.0;
}

double factorial(std::size_t n) { return std::tgamma(static_cast<double>(n) + 1.0); }

cplx power_int(cplx base, std::size_t e) {
    cplx out(1.0);
    for (std::size_t i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

Vdm2Blocks::Vdm2Blocks(const WeightFunction& g, std::size_t d)
    : g_(g), d_(d), minv_(0, 0), detm_(1.0) {
    if (d == 0) return;
    MomentMatrix m = bimoment_matrix(g, d);
    if (m.condition_estimate >= kSingularConditionThreshold)
        throw SingularMomentMatrix("bimoment matrix is numerically singular");
    detm_ = determinant(m.entries);
    minv_ = solve(m.entries, ComplexMatrix::identity(d)).solution;
}

ComplexMatrix Vdm2Blocks::f_row(cplx kappa1) const {
    ComplexMatrix row(1, d_);
    for (std::size_t b = 0; b < d_; ++b)
        row(0, b) = cauchy_transform(g_, kappa1, 1, static_cast<int>(b) + 1, false);
    return row;
}

ComplexMatrix Vdm2Blocks::fstar_column(cplx lambda1) const {
    ComplexMatrix col(d_, 1);
    for (std::size_t a = 0; a < d_; ++a)
        col(a, 0) = cauchy_transform(g_, lambda1, static_cast<int>(a) + 1, 1, true);
    return col;
}

ComplexMatrix Vdm2Blocks::lambda_row(cplx lambda2) const {
    ComplexMatrix row(1, d_);
    for (std::size_t b = 0; b < d_; ++b) row(0, b) = power_int(lambda2, b);
    return row;
}

ComplexMatrix Vdm2Blocks::k_column(cplx kappa2) const {
    ComplexMatrix col(d_, 1);
    for (std::size_t a = 0; a < d_; ++a) col(a, 0) = power_int(kappa2, a);
    return col;
}

cplx Vdm2Blocks::z1010(cplx kappa1, cplx lambda1) const {
    return double_pole_transform(g_, kappa1, lambda1);
}

cplx Vdm2Blocks::k11(cplx lambda2, cplx kappa2) const {
    if (d_ == 0) return cplx(0.0);
    return -(lambda_row(lambda2) * minv_ * k_column(kappa2))(0, 0);
}

cplx Vdm2Blocks::k12(cplx lambda1, cplx lambda2) const {
    cplx corr(0.0);
    if (d_ > 0) corr = (lambda_row(lambda2) * minv_ * fstar_column(lambda1))(0, 0);
    return 1.0 / (lambda1 - lambda2) - corr;
}

cplx Vdm2Blocks::k21(cplx kappa1, cplx kappa2) const {
    cplx corr(0.0);
    if (d_ > 0) corr = (f_row(kappa1) * minv_ * k_column(kappa2))(0, 0);
    return 1.0 / (kappa1 - kappa2) - corr;
}

cplx Vdm2Blocks::k22(cplx kappa1, cplx lambda1) const {
    cplx corr(0.0);
    if (d_ > 0) corr = (f_row(kappa1) * minv_ * fstar_column(lambda1))(0, 0);
    return z1010(kappa1, lambda1) - corr;
}

cplx z_tilde(const Vdm2Spec& spec) {
    const long long k1 = static_cast<long long>(spec.kappa.bosonic.size());
    const long long k2 = static_cast<long long>(spec.kappa.fermionic.size());
    const long long l1 = static_cast<long long>(spec.lambda.bosonic.size());
    const long long l2 = static_cast<long long>(spec.lambda.fermionic.size());
    const long long n = static_cast<long long>(spec.N);
    const long long d = k2 + n - k1;
    if (d != l2 + n - l1 || d < 0)
        throw DimensionMismatch("block size d must be equal for both families and >= 0");
    Vdm2Blocks blocks(spec.g, static_cast<std::size_t>(d));
    const std::size_t dim = static_cast<std::size_t>(l2 + k1);
    ComplexMatrix m(dim, dim);
    for (long long a = 0; a < l2; ++a) {
        const cplx la2 = spec.lambda.fermionic[a];
        for (long long b = 0; b < k2; ++b) m(a, b) = blocks.k11(la2, spec.kappa.fermionic[b]);
        for (long long b = 0; b < l1; ++b)
            m(a, k2 + b) = blocks.k12(spec.lambda.bosonic[b], la2);
    }
    for (long long a = 0; a < k1; ++a) {
        const cplx ka1 = spec.kappa.bosonic[a];
        for (long long b = 0; b < k2; ++b)
            m(l2 + a, b) = blocks.k21(ka1, spec.kappa.fermionic[b]);
        for (long long b = 0; b < l1; ++b)
            m(l2 + a, k2 + b) = blocks.k22(ka1, spec.lambda.bosonic[b]);
    }
    const cplx ber = sqrt_ber2_product(spec.kappa) * sqrt_ber2_product(spec.lambda);
    return parity_sign((l2 + k2) * (l1 + k1 - 1) / 2) * factorial(spec.N) *
           blocks.det_moment() / ber * determinant(m);
}

cplx z_tilde_degenerate(const Vdm2Spec& spec) {
    const long long k1 = static_cast<long long>(spec.kappa.bosonic.size());
    const long long k2 = static_cast<long long>(spec.kappa.fermionic.size());
    const long long l1 = static_cast<long long>(spec.lambda.bosonic.size());
    const long long l2 = static_cast<long long>(spec.lambda.fermionic.size());
    const long long n = static_cast<long long>(spec.N);
    const long long dk = k1 - k2 - n;
    const long long dl = l1 - l2 - n;
    if (dk < 0 || dl < 0)
        throw DimensionMismatch("degenerate path requires k1-k2-N >= 0 and l1-l2-N >= 0");
    const std::size_t dim = static_cast<std::size_t>(l2 + dl + k1);
    ComplexMatrix m(dim, dim);
    Vdm2Blocks blocks(spec.g, 0);
    for (long long a = 0; a < l2; ++a)
        for (long long b = 0; b < l1; ++b)
            m(a, k2 + dk + b) =
                1.0 / (spec.lambda.bosonic[b] - spec.lambda.fermionic[a]);
    for (long long a = 0; a < dl; ++a)
        for (long long b = 0; b < l1; ++b)
            m(l2 + a, k2 + dk + b) = power_int(spec.lambda.bosonic[b], a);
    for (long long a = 0; a < k1; ++a) {
        const cplx ka1 = spec.kappa.bosonic[a];
        for (long long b = 0; b < k2; ++b)
            m(l2 + dl + a, b) = 1.0 / (ka1 - spec.kappa.fermionic[b]);
        for (long long b = 0; b < dk; ++b) m(l2 + dl + a, k2 + b) = power_int(ka1, b);
        for (long long b = 0; b < l1; ++b)
            m(l2 + dl + a, k2 + dk + b) = blocks.z1010(ka1, spec.lambda.bosonic[b]);
    }
    const cplx ber = sqrt_ber2_product(spec.kappa) * sqrt_ber2_product(spec.lambda);
    return parity_sign((l1 + k1) * (l1 + k1 - 1) / 2 + n * (k2 + l2 + 1)) *
           factorial(spec.N) / ber * determinant(m);
}

cplx z_tilde_value(const Vdm2Spec& spec) {
    const long long k1 = static_cast<long long>(spec.kappa.bosonic.size());
    const long long k2 = static_cast<long long>(spec.kappa.fermionic.size());
    const long long l1 = static_cast<long long>(spec.lambda.bosonic.size());
    const long long l2 = static_cast<long long>(spec.lambda.fermionic.size());
    const long long n = static_cast<long long>(spec.N);
    if (k2 + n - k1 == l2 + n - l1 && k2 + n - k1 >= 0) return z_tilde(spec);
    if (k1 - k2 - n >= 0 && l1 - l2 - n >= 0) return z_tilde_degenerate(spec);
    throw DimensionMismatch("no applicable reduction for these list sizes");
}

std::vector<HermitianSplit> admissible_splits(std::size_t ktilde1, std::size_t ktilde2,
                                              std::size_t N) {
    std::vector<HermitianSplit> out;
    for (std::size_t k1 = 0; k1 <= ktilde1; ++k1)
        for (std::size_t k2 = 0; k2 <= ktilde2; ++k2) {
            const std::size_t l1 = ktilde1 - k1;
            const std::size_t l2 = ktilde2 - k2;
            const long long d = static_cast<long long>(k2 + N) - static_cast<long long>(k1);
            if (d < 0) continue;
            if (d != static_cast<long long>(l2 + N) - static_cast<long long>(l1)) continue;
            out.push_back({k1, k2, l1, l2});
        }
    return out;
}

cplx hermitian_ratio_average(const WeightFunction& p, std::size_t N,
                             const SpectralParameters& kappa,
                             std::optional<HermitianSplit> split) {
    const std::size_t kt1 = kappa.bosonic.size();
    const std::size_t kt2 = kappa.fermionic.size();
    HermitianSplit s;
    if (split) {
        s = *split;
        if (s.k1 + s.l1 != kt1 || s.k2 + s.l2 != kt2)
            throw InvalidParameter("split does not partition the parameter lists");
    } else {
        auto all = admissible_splits(kt1, kt2, N);
        if (all.empty()) throw DimensionMismatch("no admissible split for these counts");
        s = all.front();
    }
    Vdm2Spec spec;
    spec.N = N;
    spec.g = p;
    spec.kappa.bosonic.assign(kappa.bosonic.begin(), kappa.bosonic.begin() + s.k1);
    spec.lambda.bosonic.assign(kappa.bosonic.begin() + s.k1, kappa.bosonic.end());
    spec.kappa.fermionic.assign(kappa.fermionic.begin(), kappa.fermionic.begin() + s.k2);
    spec.lambda.fermionic.assign(kappa.fermionic.begin() + s.k2, kappa.fermionic.end());
    const cplx zt = z_tilde_value(spec);
    double pref = 1.0;
    for (std::size_t j = 1; j <= N; ++j)
        pref *= std::pow(std::acos(-1.0), static_cast<double>(j) - 1.0) / factorial(j - 1);
    pref /= factorial(N);
    return parity_sign(static_cast<long long>((kt1 + kt2) * N)) * pref * zt;
}

cplx hermitian_ratio_average_sqrtber(const WeightFunction& p, std::size_t N,
                                     const SpectralParameters& kappa) {
    SqrtBerSpec spec;
    for (std::size_t j = 0; j < N; ++j)
        spec.f_weights.push_back(monomial_times(p, static_cast<int>(j)));
    spec.sp = kappa;
    const cplx z = z_value(spec);
    double pref = 1.0;
    for (std::size_t j = 1; j <= N; ++j)
        pref *= std::pow(-std::acos(-1.0), static_cast<double>(j) - 1.0) / factorial(j - 1);
    return parity_sign(static_cast<long long>(kappa.bosonic.size() * N)) * pref * z;
}

}  // namespace rmt
