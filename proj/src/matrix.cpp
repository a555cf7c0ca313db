#include "rmt/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace rmt {

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
    ComplexMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx v = (*this)(r, k);
            if (v == cplx(0.0)) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += v * other(k, c);
        }
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix difference shape mismatch");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c) - other(r, c);
    return out;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::norm1() const {
    double best = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < rows_; ++r) s += std::abs((*this)(r, c));
        best = std::max(best, s);
    }
    return best;
}

namespace {

struct LuFactors {
    ComplexMatrix lu;
    std::vector<std::size_t> perm;
    int swap_sign = 1;
    bool singular = false;
};

LuFactors lu_factor(const ComplexMatrix& m) {
    const std::size_t n = m.rows();
    LuFactors f{m, {}, 1, false};
    f.perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(f.lu(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            const double v = std::abs(f.lu(r, k));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) {
            f.singular = true;
            return f;
        }
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(f.lu(k, c), f.lu(piv, c));
            std::swap(f.perm[k], f.perm[piv]);
            f.swap_sign = -f.swap_sign;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            const cplx factor = f.lu(r, k) / f.lu(k, k);
            f.lu(r, k) = factor;
            for (std::size_t c = k + 1; c < n; ++c) f.lu(r, c) -= factor * f.lu(k, c);
        }
    }
    return f;
}

ComplexMatrix lu_solve(const LuFactors& f, const ComplexMatrix& rhs) {
    const std::size_t n = f.lu.rows();
    ComplexMatrix x(n, rhs.cols());
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
        std::vector<cplx> y(n);
        for (std::size_t r = 0; r < n; ++r) {
            cplx s = rhs(f.perm[r], c);
            for (std::size_t k = 0; k < r; ++k) s -= f.lu(r, k) * y[k];
            y[r] = s;
        }
        for (std::size_t r = n; r-- > 0;) {
            cplx s = y[r];
            for (std::size_t k = r + 1; k < n; ++k) s -= f.lu(r, k) * x(k, c);
            x(r, c) = s / f.lu(r, r);
        }
    }
    return x;
}

}  // namespace

cplx determinant(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return cplx(1.0);
    std::vector<std::complex<long double>> a(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a[r * n + c] = std::complex<long double>(m(r, c).real(), m(r, c).imag());
    return determinant(n, a);
}

cplx determinant(std::size_t n, const std::vector<std::complex<long double>>& entries) {
    if (entries.size() != n * n) throw DimensionMismatch("determinant entry count mismatch");
    if (n == 0) return cplx(1.0);
    // Eliminate in extended precision: the matrices here are small but can be
    // poorly conditioned (mixed Cauchy / monomial columns), and the extra
    // mantissa bits keep the determinant accurate in those cases.
    using lcplx = std::complex<long double>;
    std::vector<lcplx> a = entries;
    lcplx det(1.0L);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        long double best = std::abs(a[k * n + k]);
        for (std::size_t r = k + 1; r < n; ++r) {
            const long double v = std::abs(a[r * n + k]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0L) return cplx(0.0);
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[piv * n + c]);
            det = -det;
        }
        det *= a[k * n + k];
        for (std::size_t r = k + 1; r < n; ++r) {
            const lcplx factor = a[r * n + k] / a[k * n + k];
            for (std::size_t c = k + 1; c < n; ++c) a[r * n + c] -= factor * a[k * n + c];
        }
    }
    return cplx(static_cast<double>(det.real()), static_cast<double>(det.imag()));
}

cplx pfaffian(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("pfaffian of non-square matrix");
    const std::size_t n = m.rows();
    if (n % 2 != 0) throw DimensionMismatch("pfaffian needs even dimension");
    const double scale = std::max(1.0, m.max_abs());
    double asym = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            asym = std::max(asym, std::abs(m(r, c) + m(c, r)));
    if (asym > 1e-12 * scale) throw NotAntisymmetric("matrix is not antisymmetric");
    if (n == 0) return cplx(1.0);

    // Parlett-Reid elimination: zero column entries below the first
    // subdiagonal with pivoting on the largest subcolumn entry.
    ComplexMatrix a = m;
    cplx pf(1.0);
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t piv = k + 1;
        double best = std::abs(a(k + 1, k));
        for (std::size_t r = k + 2; r < n; ++r) {
            const double v = std::abs(a(r, k));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) return cplx(0.0);
        if (piv != k + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k + 1, c), a(piv, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k + 1), a(r, piv));
            pf = -pf;
        }
        pf *= a(k + 1, k) * cplx(-1.0);
        for (std::size_t r = k + 2; r < n; ++r) {
            const cplx factor = a(r, k) / a(k + 1, k);
            if (factor == cplx(0.0)) continue;
            for (std::size_t c = 0; c < n; ++c) a(r, c) -= factor * a(k + 1, c);
            for (std::size_t rr = 0; rr < n; ++rr) a(rr, r) -= factor * a(rr, k + 1);
        }
    }
    return pf;
}

ConditionedSolve solve(const ComplexMatrix& m, const ComplexMatrix& rhs) {
    if (m.rows() != m.cols()) throw DimensionMismatch("solve with non-square matrix");
    if (m.rows() != rhs.rows()) throw DimensionMismatch("solve rhs row mismatch");
    if (m.rows() == 0) return {ComplexMatrix(0, rhs.cols()), 1.0};
    LuFactors f = lu_factor(m);
    if (f.singular) throw SingularBlock("exactly singular matrix in solve");
    ComplexMatrix inv = lu_solve(f, ComplexMatrix::identity(m.rows()));
    const double cond = m.norm1() * inv.norm1();
    if (!(cond < kSingularConditionThreshold))
        throw SingularBlock("condition estimate exceeds threshold");
    ConditionedSolve out;
    out.solution = lu_solve(f, rhs);
    out.condition_estimate = std::max(1.0, cond);
    return out;
}

cplx schur_det_split(const ComplexMatrix& a, const ComplexMatrix& b,
                     const ComplexMatrix& c, const ComplexMatrix& d) {
    if (a.rows() != a.cols() || d.rows() != d.cols())
        throw DimensionMismatch("schur_det_split needs square diagonal blocks");
    if (b.rows() != a.rows() || b.cols() != d.cols() || c.rows() != d.rows() ||
        c.cols() != a.cols())
        throw DimensionMismatch("schur_det_split off-diagonal shape mismatch");
    if (d.rows() == 0) return determinant(a);
    ConditionedSolve s = solve(d, c);
    return determinant(d) * determinant(a - b * s.solution);
}

}  // namespace rmt
