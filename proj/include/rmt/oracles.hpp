#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "rmt/sqrtber.hpp"
#include "rmt/vdm2.hpp"

namespace rmt {

struct McConfig {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    std::size_t shards = 8;
    double eps_mc = 1e-8;  // clamp on |det| of denominators
};

struct OracleResult {
    cplx value;
    double error = 0.0;  // standard error (MC) or refinement bound (quadrature)
    std::string method;
    double clamp_rate = 0.0;
};

// Literal multi-dimensional quadrature of the master integrals; total
// integration dimension (contour parameters) must not exceed 4.
OracleResult direct_quadrature_z(const SqrtBerSpec& spec);
OracleResult direct_quadrature_z(const Vdm2Spec& spec);

// Monte Carlo sampling of det-ratio averages over matrix ensembles
// ("gaussian", "laguerre", "circular"). Deterministic for fixed seed/shards.
OracleResult mc_matrix_average(const std::string& ensemble,
                               const std::map<std::string, double>& params, std::size_t N,
                               const SpectralParameters& kappa, const McConfig& mc);

struct TheoremReport {
    cplx lhs;
    cplx rhs;
    double rel_dev = 0.0;
    bool pass = false;
};

// Bordered two-determinant integration identity, checked on seeded random
// polynomial-times-Gaussian test functions.
TheoremReport andreief_check(std::uint64_t seed, std::size_t n, std::size_t k, std::size_t l,
                             double tol = 1e-7);

// Bordered determinant-to-Pfaffian integration identity on the same family.
TheoremReport debruijn_check(std::uint64_t seed, std::size_t n, std::size_t l,
                             double tol = 1e-7);

}  // namespace rmt
