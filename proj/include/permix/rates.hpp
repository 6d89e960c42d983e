#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "permix/classify.hpp"
#include "permix/common.hpp"
#include "permix/intmatrix.hpp"
#include "permix/modpoly.hpp"
#include "permix/polynomial.hpp"
#include "permix/rational_la.hpp"
#include "permix/spectrum.hpp"

namespace permix {

// Everything the spectral layer knows about one sigma∘f.
struct RateReport {
    double lambda_sigma = 0.0;        // largest eigenvalue modulus strictly inside the unit circle
    bool spectral_mixing = false;     // unit-circle spectrum is {1} (count 1)
    double r_ess = 0.0;               // essential spectral radius, 1/m for constant slope m
    int eigenvalue_1_multiplicity = 0;  // exact geometric multiplicity (= ergodic components)
    int unit_circle_count = 0;
    bool decelerating = false;        // mixing and Λ strictly above 1/m (exact certificate)
    bool exact_path = false;          // spectrum derived from the exact charpoly
};

inline double worst_rate_bound(int m, int N) {
    if (m < 2) throw DomainError("worst_rate_bound: m must be >= 2");
    if (N <= m) throw DomainError("worst_rate_bound: requires N > m");
    if (std::gcd(m, N) != 1) throw DomainError("worst_rate_bound: requires gcd(m, N) = 1");
    return std::abs(std::sin(std::numbers::pi * m / N) / (m * std::sin(std::numbers::pi / N)));
}

// The permutation tau(i) = m^{-1} i mod N.  Satisfies P(tau) A(m,N) = C(m,N)
// exactly, so A(m,N)P(tau) is conjugate to the circulant and Λ_tau attains
// the worst-rate bound.
inline Permutation worst_permutation(int m, int N) {
    if (std::gcd(m, N) != 1) throw DomainError("worst_permutation: requires gcd(m, N) = 1");
    long long inv = 0;
    for (long long x = 1; x < N; ++x)
        if ((x * m) % N == 1) { inv = x; break; }
    if (inv == 0 && N != 1) throw DomainError("worst_permutation: no modular inverse");
    std::vector<int> v(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) v[static_cast<size_t>(i)] = static_cast<int>((inv * i) % N);
    Permutation tau{std::move(v)};
    if (!(build_P(tau) * build_A(m, N) == build_C(m, N)))
        throw ComputeError("worst_permutation: row-relabeling identity failed");
    return tau;
}

namespace detail {

inline double lambda_from_moduli(const std::vector<Complex>& eigs, double scale, double band) {
    // eigs live on the scale-m circle; report max modulus strictly inside.
    double best = 0.0;
    for (const auto& l : eigs) {
        double mod = std::abs(l) / scale;
        if (mod < 1.0 - band) best = std::max(best, mod);
    }
    return best;
}

}  // namespace detail

// Mixing rate of sigma∘f from the transition-matrix spectrum.  For N within
// the exact cap the characteristic polynomial route gives exact unit-circle
// multiplicities and well-conditioned roots; beyond it a dense eigensolve
// with the band tolerance is used.
inline RateReport lambda_sigma(const Permutation& sigma, int m, int N,
                               double tol = kUnitCircleTol) {
    if (sigma.degree() != N) throw DomainError("lambda_sigma: sigma degree != N");
    IntMatrix AP = build_AP(sigma, m);
    RateReport rep;
    rep.r_ess = 1.0 / m;
    rep.eigenvalue_1_multiplicity = eigenvalue_kernel_dimension(AP, Rational(m));

    bool mixing = classify_mixing_fast(sigma, m, N).mixing();
    if (N <= kExactSpectrumCap) {
        rep.exact_path = true;
        auto cert = certify_spectrum(charpoly_big(AP), m);
        rep.unit_circle_count = cert.unit_circle_mult;
        rep.decelerating = mixing && cert.slower;
        Spectrum s = exact_spectrum(AP, tol);
        rep.lambda_sigma = detail::lambda_from_moduli(s.eigenvalues, m, 1e-9);
    } else {
        auto cert = certify_spectrum_int(AP, m);
        Spectrum s = eigen_spectrum(AP.to_eigen() / m, kEigenSolveTol, tol);
        rep.unit_circle_count = cert.unit_circle_mult;
        rep.decelerating = mixing && cert.slower;
        rep.lambda_sigma = s.max_modulus_below(1.0 - tol);
    }
    rep.spectral_mixing = rep.unit_circle_count == 1;
    return rep;
}

// Largest eigenvalue of B^T B restricted to V_0 = {x : sum x_i = 0} for a
// column-stochastic B.  For circulant B, sqrt(eta) equals the largest
// eigenvalue modulus of B on V_0.
inline double stochastic_eta(const Eigen::MatrixXd& B) {
    int n = static_cast<int>(B.rows());
    if (B.cols() != n) throw DomainError("stochastic_eta: matrix must be square");
    for (int j = 0; j < n; ++j) {
        double s = B.col(j).sum();
        if (std::abs(s - 1.0) > 1e-12)
            throw DomainError("stochastic_eta: input is not column-stochastic");
    }
    Eigen::MatrixXd U = Eigen::MatrixXd::Zero(n, n - 1);  // orthonormal basis of V_0 (Helmert)
    for (int k = 0; k < n - 1; ++k) {
        double norm = std::sqrt(static_cast<double>(k + 1) * (k + 2));
        for (int i = 0; i <= k; ++i) U(i, k) = 1.0 / norm;
        U(k + 1, k) = -(k + 1.0) / norm;
    }
    Eigen::MatrixXd S = U.transpose() * (B.transpose() * B) * U;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver((S + S.transpose()) / 2.0);
    if (solver.info() != Eigen::Success) throw ComputeError("stochastic_eta: eigensolve failed");
    double eta = solver.eigenvalues().maxCoeff();
    return eta < 0 ? 0.0 : eta;
}

// Eigenvalues of M restricted to V_0 (valid when M preserves V_0, e.g. any
// column-stochastic M).
inline std::vector<Complex> spectrum_on_v0(const Eigen::MatrixXd& M) {
    int n = static_cast<int>(M.rows());
    Eigen::MatrixXd U = Eigen::MatrixXd::Zero(n, n - 1);
    for (int k = 0; k < n - 1; ++k) {
        double norm = std::sqrt(static_cast<double>(k + 1) * (k + 2));
        for (int i = 0; i <= k; ++i) U(i, k) = 1.0 / norm;
        U(k + 1, k) = -(k + 1.0) / norm;
    }
    Eigen::MatrixXd R = U.transpose() * M * U;
    return eigen_spectrum(R).eigenvalues;
}

struct AlgebraicCheck {
    bool monic = true;
    bool m_multiplicity_one = false;  // (x - m) divides exactly once
    bool quotient_norm_one = false;   // |constant term of quotient| == 1
    Poly<BigInt> charpoly;
    Poly<BigInt> quotient;

    bool ok() const { return monic && m_multiplicity_one && quotient_norm_one; }
};

// Final-proposition check: for gcd(m,N)=1 the charpoly of A(m,N)P(sigma) is
// monic with eigenvalue m of algebraic multiplicity 1 and all other roots
// algebraic integers of norm ±1.
inline AlgebraicCheck algebraic_eigenvalue_check(const Permutation& sigma, int m, int N) {
    if (std::gcd(m, N) != 1) throw DomainError("algebraic_eigenvalue_check: requires gcd(m,N)=1");
    AlgebraicCheck chk;
    chk.charpoly = charpoly_big(build_AP(sigma, m));
    chk.monic = chk.charpoly[0] == 1;
    Poly<BigInt> lin{BigInt(1), BigInt(-m)};
    Poly<BigInt> q1, q2;
    if (poly_divide_exact(chk.charpoly, lin, q1)) {
        chk.quotient = q1;
        chk.m_multiplicity_one = !poly_divide_exact(q1, lin, q2);
    }
    if (!chk.quotient.empty()) {
        BigInt c = chk.quotient.back();
        chk.quotient_norm_one = (c == 1 || c == -1);
    }
    return chk;
}

// Empirical convergence-to-equilibrium rate: iterate a random step density
// under Phi(1) = B(m,N)Q(sigma)/m and fit log ||v_k - rho||_1 against k over
// the usable tail (first 20% discarded, residuals below 1e-13 treated as
// arithmetic noise).
inline double density_evolution_rate(const Permutation& sigma, int m, int N, int steps,
                                     std::uint64_t seed = 1) {
    if (steps < 10) throw DomainError("density_evolution_rate: steps must be >= 10");
    if (!classify_mixing_fast(sigma, m, N).mixing())
        throw DomainError("density_evolution_rate: sigma∘f is not mixing; rate undefined");
    int q = N * m;
    Eigen::MatrixXd Phi = build_BQ(sigma, m).to_eigen() / m;
    std::mt19937_64 rng(seed);
    Eigen::RowVectorXd v(q);
    for (int i = 0; i < q; ++i)
        v(i) = 0.1 + static_cast<double>(rng() >> 11) * 0x1.0p-53;
    v /= v.mean();  // density normalization: integral 1
    std::vector<double> resid;
    resid.reserve(static_cast<size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        double r = (v.array() - 1.0).abs().mean();  // L1 distance to the uniform density
        if (r < 1e-13) break;
        resid.push_back(r);
        v = v * Phi;
    }
    int T = static_cast<int>(resid.size());
    if (T < 3) return 0.0;
    int lo = std::max(1, T / 5);
    double sk = 0, sy = 0, skk = 0, sky = 0;
    int cnt = 0;
    for (int k = lo; k < T; ++k) {
        double y = std::log(resid[static_cast<size_t>(k)]);
        sk += k; sy += y; skk += static_cast<double>(k) * k; sky += k * y;
        ++cnt;
    }
    if (cnt < 2) return 0.0;
    double slope = (cnt * sky - sk * sy) / (cnt * skk - sk * sk);
    return std::exp(slope);
}

}  // namespace permix
