#include "rmt/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <random>
#include <thread>
#include <vector>

namespace rmt {

namespace {

std::size_t worker_cap() {
    if (const char* env = std::getenv("RMT_THREADS")) {
        const long v = std::atol(env);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 4;
}

// Nested quadrature over the contours of a list of one-dimensional weights;
// plane weights contribute two nested levels.
cplx nested_weighted(const std::vector<const WeightFunction*>& ws,
                     const std::function<cplx(const std::vector<cplx>&)>& f,
                     double rel_tol) {
    std::size_t dims = 0;
    for (const WeightFunction* w : ws) dims += w->is_plane() ? 2 : 1;
    if (dims > 4) throw DimensionTooLarge("direct quadrature limited to dimension 4");
    std::vector<cplx> z(ws.size());
    std::function<cplx(std::size_t, std::size_t)> nest =
        [&](std::size_t level, std::size_t depth) -> cplx {
        if (level == ws.size()) return f(z);
        const WeightFunction& w = *ws[level];
        const double tol = rel_tol * std::pow(0.3, static_cast<double>(depth));
        if (w.is_plane()) {
            QuadratureResult r = integrate(
                [&](double x) {
                    return integrate(
                               [&](double y) {
                                   z[level] = cplx(x, y);
                                   return w.plane_density(x, y) * nest(level + 1, depth + 2);
                               },
                               w.ylo, w.yhi, 1e-14, tol * 0.3, 2000)
                        .value;
                },
                w.xlo, w.xhi, 1e-14, tol, 2000);
            return r.value;
        }
        auto integrand = [&](double t) {
            z[level] = w.point(t);
            return w.density(t) * nest(level + 1, depth + 1);
        };
        if (w.periodic) return integrate_periodic(integrand, 1e-14, tol).value;
        return integrate(integrand, w.lo, w.hi, 1e-14, tol, 2000).value;
    };
    return nest(0, 0);
}

cplx list_vandermonde(const std::vector<cplx>& v) {
    cplx prod(1.0);
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b) prod *= v[a] - v[b];
    return prod;
}

struct ShardStats {
    cplx sum{0.0};
    double sumsq = 0.0;
    std::uint64_t count = 0;
    std::uint64_t clamps = 0;
};

ShardStats merge(const ShardStats& a, const ShardStats& b) {
    return {a.sum + b.sum, a.sumsq + b.sumsq, a.count + b.count, a.clamps + b.clamps};
}

ComplexMatrix sample_gaussian_hermitian(std::mt19937_64& rng, std::size_t n, double c) {
    std::normal_distribution<double> diag(0.0, std::sqrt(0.5 / c));
    std::normal_distribution<double> off(0.0, std::sqrt(0.25 / c));
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = diag(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v(off(rng), off(rng));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

ComplexMatrix sample_laguerre(std::mt19937_64& rng, std::size_t n, double nu, double c) {
    const std::size_t m = n + static_cast<std::size_t>(std::llround(nu));
    std::normal_distribution<double> entry(0.0, std::sqrt(0.5 / c));
    ComplexMatrix x(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) x(i, j) = cplx(entry(rng), entry(rng));
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx s(0.0);
            for (std::size_t k = 0; k < m; ++k) s += x(i, k) * std::conj(x(j, k));
            h(i, j) = s;
        }
    return h;
}

ComplexMatrix sample_haar_unitary(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> entry(0.0, 1.0);
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = cplx(entry(rng), entry(rng));
    // Gram-Schmidt with the phase convention that makes the distribution Haar.
    ComplexMatrix q(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<cplx> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = a(i, col);
        for (std::size_t prev = 0; prev < col; ++prev) {
            cplx proj(0.0);
            for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, prev)) * a(i, col);
            for (std::size_t i = 0; i < n; ++i) v[i] -= proj * q(i, prev);
        }
        double norm = 0.0;
        for (const cplx& x : v) norm += std::norm(x);
        norm = std::sqrt(norm);
        cplx rkk(0.0);
        for (std::size_t i = 0; i < n; ++i) q(i, col) = v[i] / norm;
        for (std::size_t i = 0; i < n; ++i) rkk += std::conj(q(i, col)) * a(i, col);
        const cplx phase = rkk / std::abs(rkk);
        for (std::size_t i = 0; i < n; ++i) q(i, col) /= phase;
    }
    return q;
}

cplx shifted_det(const ComplexMatrix& h, cplx shift) {
    ComplexMatrix m = h;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= shift;
    return determinant(m);
}

}  // namespace

OracleResult direct_quadrature_z(const SqrtBerSpec& spec) {
    const std::size_t n1 = spec.g_weights.size();
    const std::size_t n2 = spec.f_weights.size();
    if (n1 + n2 == 0) return {cplx(1.0), 0.0, "quadrature"};
    std::vector<const WeightFunction*> ws;
    for (const WeightFunction& w : spec.g_weights) ws.push_back(&w);
    for (const WeightFunction& w : spec.f_weights) ws.push_back(&w);
    const double rel_tol = 1e-8;
    cplx value = nested_weighted(
        ws,
        [&](const std::vector<cplx>& z) {
            std::vector<cplx> z1(z.begin(), z.begin() + n1);
            std::vector<cplx> z2(z.begin() + n1, z.end());
            cplx num(1.0), den(1.0);
            for (const cplx& za : z1)
                for (const cplx& kb : spec.sp.bosonic) num *= za - kb;
            for (const cplx& za : z2)
                for (const cplx& kb : spec.sp.fermionic) num *= za - kb;
            for (const cplx& za : z1)
                for (const cplx& kb : spec.sp.fermionic) den *= za - kb;
            for (const cplx& ka : spec.sp.bosonic)
                for (const cplx& zb : z2) den *= ka - zb;
            cplx cross(1.0);
            for (const cplx& za : z1)
                for (const cplx& zb : z2) cross *= za - zb;
            return num / den * list_vandermonde(z1) * list_vandermonde(z2) / cross;
        },
        rel_tol);
    return {value, std::abs(value) * rel_tol, "quadrature"};
}

OracleResult direct_quadrature_z(const Vdm2Spec& spec) {
    if (spec.N == 0) return {cplx(1.0), 0.0, "quadrature"};
    std::vector<const WeightFunction*> ws(spec.N, &spec.g);
    const double rel_tol = 1e-8;
    cplx value = nested_weighted(
        ws,
        [&](const std::vector<cplx>& z) {
            cplx num(1.0), den(1.0);
            for (const cplx& zb : z) {
                for (const cplx& ka : spec.kappa.fermionic) num *= ka - zb;
                for (const cplx& la : spec.lambda.fermionic) num *= la - std::conj(zb);
                for (const cplx& ka : spec.kappa.bosonic) den *= ka - zb;
                for (const cplx& la : spec.lambda.bosonic) den *= la - std::conj(zb);
            }
            std::vector<cplx> zc(z.size());
            for (std::size_t i = 0; i < z.size(); ++i) zc[i] = std::conj(z[i]);
            return num / den * list_vandermonde(z) * list_vandermonde(zc);
        },
        rel_tol);
    return {value, std::abs(value) * rel_tol, "quadrature"};
}

OracleResult mc_matrix_average(const std::string& ensemble,
                               const std::map<std::string, double>& params, std::size_t n,
                               const SpectralParameters& kappa, const McConfig& mc) {
    if (mc.samples == 0) throw InsufficientSamples("at least one sample is required");
    for (const cplx& pole : kappa.bosonic)
        if (std::abs(pole.imag()) < 10.0 * mc.eps_mc)
            throw InvalidParameter("pole parameters must stay away from the real axis");
    auto get = [&](const std::string& key, double fallback) {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    };
    const double c = get("c", 1.0);
    const double nu = get("nu", 0.0);
    enum class Kind { Gaussian, Laguerre, Circular } kind;
    if (ensemble == "gaussian" || ensemble == "gue" || ensemble == "hermitian")
        kind = Kind::Gaussian;
    else if (ensemble == "laguerre" || ensemble == "chiral")
        kind = Kind::Laguerre;
    else if (ensemble == "circular" || ensemble == "cue")
        kind = Kind::Circular;
    else
        throw UnsupportedEnsemble("no sampler for ensemble: " + ensemble);

    const std::size_t shards = std::max<std::size_t>(1, mc.shards);
    auto run_shard = [&](std::size_t shard) {
        std::mt19937_64 rng(mc.seed ^ (0x9E3779B97F4A7C15ULL * (shard + 1)));
        const std::uint64_t base = mc.samples / shards;
        const std::uint64_t count = base + (shard < mc.samples % shards ? 1 : 0);
        ShardStats stats;
        for (std::uint64_t i = 0; i < count; ++i) {
            ComplexMatrix h(0, 0);
            switch (kind) {
                case Kind::Gaussian: h = sample_gaussian_hermitian(rng, n, c); break;
                case Kind::Laguerre: h = sample_laguerre(rng, n, nu, c); break;
                case Kind::Circular: h = sample_haar_unitary(rng, n); break;
            }
            cplx v(1.0);
            for (const cplx& root : kappa.fermionic) v *= shifted_det(h, root);
            for (const cplx& pole : kappa.bosonic) {
                cplx d = shifted_det(h, pole);
                if (std::abs(d) < mc.eps_mc) {
                    d *= mc.eps_mc / std::abs(d);
                    ++stats.clamps;
                }
                v /= d;
            }
            stats.sum += v;
            stats.sumsq += std::norm(v);
            ++stats.count;
        }
        return stats;
    };

    std::vector<ShardStats> results(shards);
    const std::size_t cap = worker_cap();
    for (std::size_t start = 0; start < shards; start += cap) {
        std::vector<std::future<ShardStats>> futures;
        for (std::size_t s = start; s < std::min(shards, start + cap); ++s)
            futures.push_back(std::async(std::launch::async, run_shard, s));
        for (std::size_t s = start; s < std::min(shards, start + cap); ++s)
            results[s] = futures[s - start].get();
    }
    // Pairwise tree reduction keeps the combination order fixed.
    std::vector<ShardStats> level = results;
    while (level.size() > 1) {
        std::vector<ShardStats> next;
        for (std::size_t i = 0; i + 1 < level.size(); i += 2)
            next.push_back(merge(level[i], level[i + 1]));
        if (level.size() % 2 == 1) next.push_back(level.back());
        level = next;
    }
    const ShardStats total = level.front();
    const double count = static_cast<double>(total.count);
    const cplx mean = total.sum / count;
    const double var = std::max(0.0, total.sumsq / count - std::norm(mean));
    OracleResult out;
    out.value = mean;
    out.error = std::sqrt(var / count);
    out.method = "mc";
    out.clamp_rate = static_cast<double>(total.clamps) / count;
    return out;
}

namespace {

struct PolyGauss {
    std::vector<double> coeffs;  // degree <= 3
    double eval_poly(double x) const {
        double v = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
        return v;
    }
    cplx operator()(double x) const { return eval_poly(x) * std::exp(-0.5 * x * x); }
};

PolyGauss random_poly(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    PolyGauss p;
    for (int i = 0; i < 4; ++i) p.coeffs.push_back(u(rng));
    return p;
}

constexpr double kTestBound = 9.0;

cplx pair_integral(const PolyGauss& a, const PolyGauss& b) {
    return integrate([&](double x) { return a(x) * b(x); }, -kTestBound, kTestBound, 1e-14,
                     1e-11)
        .value;
}

cplx nested_real(std::size_t dims, const std::function<cplx(const std::vector<double>&)>& f,
                 double rel_tol) {
    std::vector<double> lo(dims, -kTestBound), hi(dims, kTestBound);
    return integrate_box(f, lo, hi, rel_tol).value;
}

double rel_dev(cplx lhs, cplx rhs) {
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
    return std::abs(lhs - rhs) / scale;
}

}  // namespace

TheoremReport andreief_check(std::uint64_t seed, std::size_t n, std::size_t k, std::size_t l,
                             double tol) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<PolyGauss> rfun, sfun;
    for (std::size_t b = 0; b < n + k; ++b) rfun.push_back(random_poly(rng));
    for (std::size_t b = 0; b < n + l; ++b) sfun.push_back(random_poly(rng));
    ComplexMatrix rc(k, n + k), sc(l, n + l);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < n + k; ++b) rc(a, b) = u(rng);
    for (std::size_t a = 0; a < l; ++a)
        for (std::size_t b = 0; b < n + l; ++b) sc(a, b) = u(rng);

    cplx lhs = nested_real(
        n,
        [&](const std::vector<double>& z) {
            ComplexMatrix m1(n + k, n + k), m2(n + l, n + l);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < n + k; ++b) m1(a, b) = rc(a, b);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n + k; ++b) m1(k + a, b) = rfun[b](z[a]);
            for (std::size_t a = 0; a < l; ++a)
                for (std::size_t b = 0; b < n + l; ++b) m2(a, b) = sc(a, b);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n + l; ++b) m2(l + a, b) = sfun[b](z[a]);
            return determinant(m1) * determinant(m2);
        },
        1e-9);

    ComplexMatrix big(n + k + l, n + k + l);
    for (std::size_t a = 0; a < l; ++a)
        for (std::size_t b = 0; b < n + l; ++b) big(a, k + b) = sc(a, b);
    for (std::size_t a = 0; a < n + k; ++a) {
        for (std::size_t b = 0; b < k; ++b) big(l + a, b) = rc(b, a);
        for (std::size_t b = 0; b < n + l; ++b)
            big(l + a, k + b) = pair_integral(rfun[a], sfun[b]);
    }
    double sign = (k * l) % 2 == 0 ? 1.0 : -1.0;
    cplx rhs = sign * std::tgamma(static_cast<double>(n) + 1.0) * determinant(big);
    TheoremReport rep{lhs, rhs, rel_dev(lhs, rhs), false};
    rep.pass = rep.rel_dev <= tol;
    return rep;
}

TheoremReport debruijn_check(std::uint64_t seed, std::size_t n, std::size_t l, double tol) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const std::size_t rows = 2 * n + l;
    std::vector<PolyGauss> bfun, cfun;
    for (std::size_t a = 0; a < rows; ++a) {
        bfun.push_back(random_poly(rng));
        cfun.push_back(random_poly(rng));
    }
    ComplexMatrix ac(rows, l);
    for (std::size_t a = 0; a < rows; ++a)
        for (std::size_t b = 0; b < l; ++b) ac(a, b) = u(rng);

    cplx lhs = nested_real(
        n,
        [&](const std::vector<double>& z) {
            ComplexMatrix m(rows, rows);
            for (std::size_t a = 0; a < rows; ++a) {
                for (std::size_t b = 0; b < l; ++b) m(a, b) = ac(a, b);
                for (std::size_t b = 0; b < n; ++b) {
                    m(a, l + b) = bfun[a](z[b]);
                    m(a, l + n + b) = cfun[a](z[b]);
                }
            }
            return determinant(m);
        },
        1e-9);

    ComplexMatrix pf(l + rows, l + rows);
    for (std::size_t a = 0; a < l; ++a)
        for (std::size_t b = 0; b < rows; ++b) {
            pf(a, l + b) = ac(b, a);
            pf(l + b, a) = -ac(b, a);
        }
    for (std::size_t a = 0; a < rows; ++a)
        for (std::size_t b = a + 1; b < rows; ++b) {
            const cplx d = pair_integral(bfun[a], cfun[b]) - pair_integral(bfun[b], cfun[a]);
            pf(l + a, l + b) = d;
            pf(l + b, l + a) = -d;
        }
    const std::size_t e = n * (n - 1) / 2 + l * (l - 1) / 2;
    const double sign = e % 2 == 0 ? 1.0 : -1.0;
    cplx rhs = sign * std::tgamma(static_cast<double>(n) + 1.0) * pfaffian(pf);
    TheoremReport rep{lhs, rhs, rel_dev(lhs, rhs), false};
    rep.pass = rep.rel_dev <= tol;
    return rep;
}

}  // namespace rmt
