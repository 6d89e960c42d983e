#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "permix/common.hpp"
#include "permix/intmatrix.hpp"
#include "permix/polynomial.hpp"

namespace permix {

// Full spectrum of a real square matrix, eigenvalues listed with algebraic
// multiplicity (one entry per eigenvalue copy), canonically sorted.
struct Spectrum {
    std::vector<Complex> eigenvalues;
    double tolerance = kEigenSolveTol;
    int unit_circle_count = 0;  // eigenvalues with ||λ|-1| below the unit band

    double spectral_radius() const {
        double r = 0;
        for (const auto& l : eigenvalues) r = std::max(r, std::abs(l));
        return r;
    }
    double max_modulus_below(double radius) const {
        double r = 0;
        for (const auto& l : eigenvalues)
            if (std::abs(l) < radius) r = std::max(r, std::abs(l));
        return r;
    }
};

namespace detail {

inline void canonical_sort(std::vector<Complex>& v) {
    std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
}

inline int count_unit_circle(const std::vector<Complex>& v, double band) {
    int c = 0;
    for (const auto& l : v)
        if (std::abs(std::abs(l) - 1.0) < band) ++c;
    return c;
}

}  // namespace detail

// Dense nonsymmetric eigensolve (real Schur reduction under the hood).
// Throws on reported non-convergence instead of returning partial spectra.
inline Spectrum eigen_spectrum(const Eigen::MatrixXd& M, double tol = kEigenSolveTol,
                               double unit_band = kUnitCircleTol) {
    if (M.rows() != M.cols()) throw DomainError("eigen_spectrum: matrix must be square");
    if (M.rows() > kDefaultDimCap) throw DomainError("eigen_spectrum: dimension exceeds cap");
    if (!(tol > 0) || tol > 1e-6) throw DomainError("eigen_spectrum: tol must lie in (0, 1e-6]");
    Eigen::EigenSolver<Eigen::MatrixXd> solver(M, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw ComputeError("eigen_spectrum: QR iteration failed to converge");
    Spectrum s;
    s.tolerance = tol;
    s.eigenvalues.reserve(static_cast<size_t>(M.rows()));
    for (Eigen::Index i = 0; i < M.rows(); ++i) s.eigenvalues.push_back(solver.eigenvalues()[i]);
    detail::canonical_sort(s.eigenvalues);
    s.unit_circle_count = detail::count_unit_circle(s.eigenvalues, unit_band);
    return s;
}

// Roots of a monic-scaled integer polynomial through its balanced companion
// matrix; callers pass squarefree factors so every root is simple.
inline std::vector<Complex> poly_roots(const Poly<BigInt>& p) {
    int n = poly_degree(p);
    if (n <= 0) return {};
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
    double lead = p[0].convert_to<double>();
    for (int i = 0; i < n; ++i) {
        C(0, i) = -p[static_cast<size_t>(i) + 1].convert_to<double>() / lead;
        if (i + 1 < n) C(i + 1, i) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(C, false);
    if (solver.info() != Eigen::Success)
        throw ComputeError("poly_roots: companion eigensolve failed to converge");
    std::vector<Complex> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()[i]);
    return out;
}

// Spectrum of an integer matrix through its exact characteristic polynomial:
// Yun's decomposition supplies exact multiplicities, and root-finding then
// only ever sees squarefree factors (simple, well-conditioned roots).  This
// sidesteps the ε^(1/k) cluster splitting of direct QR on defective matrices.
inline Spectrum exact_spectrum(const IntMatrix& M, double unit_band = kUnitCircleTol) {
    Poly<BigInt> cp = charpoly_big(M);
    int zero_mult = 0;
    while (poly_degree(cp) > 0 && cp.back() == 0) {
        cp.pop_back();
        ++zero_mult;
    }
    Spectrum s;
    s.tolerance = kEigenSolveTol;
    for (int i = 0; i < zero_mult; ++i) s.eigenvalues.push_back(Complex{0.0, 0.0});
    for (const auto& [factor, mult] : squarefree_decomposition(cp)) {
        auto roots = poly_roots(factor);
        for (const auto& r : roots)
            for (int t = 0; t < mult; ++t) s.eigenvalues.push_back(r);
    }
    detail::canonical_sort(s.eigenvalues);
    s.unit_circle_count = detail::count_unit_circle(s.eigenvalues, unit_band);
    return s;
}

// Eigenvalues of the circulant C(m,N): λ_j = sum_{t<m} ω_j^t with
// ω_j = e^{2πij/N}; |λ_j| = |sin(mjπ/N)/sin(jπ/N)| and λ_0 = m.
inline std::vector<Complex> circulant_eigs(int m, int N) {
    if (m < 1 || m > N) throw DomainError("circulant_eigs: need 1 <= m <= N");
    std::vector<Complex> out;
    out.reserve(static_cast<size_t>(N));
    for (int j = 0; j < N; ++j) {
        Complex acc{0.0, 0.0};
        for (int t = 0; t < m; ++t)
            acc += std::polar(1.0, 2.0 * std::numbers::pi * j * t / N);
        out.push_back(acc);
    }
    return out;
}

// max_{1<=j<=N-1} |sin(mjπ/N)/sin(jπ/N)|, attained at j = 1 (and N-1).
inline double circulant_max_modulus(int m, int N) {
    if (m < 2 || m >= N) throw DomainError("circulant_max_modulus: need 2 <= m < N");
    return std::abs(std::sin(m * std::numbers::pi / N) / std::sin(std::numbers::pi / N));
}

// Optimal (min-total-cost) assignment between two equal-size eigenvalue
// multisets; returns the largest matched distance.  O(n^3) shortest
// augmenting paths.
inline double spectrum_match_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) throw DomainError("spectrum_match_distance: size mismatch");
    int n = static_cast<int>(a.size());
    if (n == 0) return 0.0;
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> u(static_cast<size_t>(n) + 1, 0), v(static_cast<size_t>(n) + 1, 0);
    std::vector<int> way(static_cast<size_t>(n) + 1, 0), match(static_cast<size_t>(n) + 1, 0);
    auto cost = [&](int i, int j) { return std::abs(a[static_cast<size_t>(i - 1)] - b[static_cast<size_t>(j - 1)]); };
    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<double> minv(static_cast<size_t>(n) + 1, kInf);
        std::vector<char> used(static_cast<size_t>(n) + 1, 0);
        do {
            used[static_cast<size_t>(j0)] = 1;
            int i0 = match[static_cast<size_t>(j0)], j1 = -1;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[static_cast<size_t>(j)]) continue;
                double cur = cost(i0, j) - u[static_cast<size_t>(i0)] - v[static_cast<size_t>(j)];
                if (cur < minv[static_cast<size_t>(j)]) {
                    minv[static_cast<size_t>(j)] = cur;
                    way[static_cast<size_t>(j)] = j0;
                }
                if (minv[static_cast<size_t>(j)] < delta) {
                    delta = minv[static_cast<size_t>(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[static_cast<size_t>(j)]) {
                    u[static_cast<size_t>(match[static_cast<size_t>(j)])] += delta;
                    v[static_cast<size_t>(j)] -= delta;
                } else {
                    minv[static_cast<size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (match[static_cast<size_t>(j0)] != 0);
        do {
            int j1 = way[static_cast<size_t>(j0)];
            match[static_cast<size_t>(j0)] = match[static_cast<size_t>(j1)];
            j0 = j1;
        } while (j0);
    }
    double worst = 0.0;
    for (int j = 1; j <= n; ++j)
        worst = std::max(worst, cost(match[static_cast<size_t>(j)], j));
    return worst;
}

}  // namespace permix
