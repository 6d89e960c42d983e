#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "permix/common.hpp"
#include "permix/intmatrix.hpp"
#include "permix/permutation.hpp"
#include "permix/rational_la.hpp"
#include "permix/spectrum.hpp"

namespace permix {

// Piecewise-linear Markov model on q equal cells: |f'| is constant on each
// cell and transition(i,j) counts the branches of cell i covering cell j.
struct FredholmModel {
    int q = 0;
    std::vector<Rational> slopes;  // |f'| restricted to each cell
    IntMatrix transition;

    void validate() const {
        if (q < 1 || static_cast<int>(slopes.size()) != q || transition.dim() != q)
            throw DomainError("FredholmModel: inconsistent dimensions");
        for (const auto& s : slopes)
            if (s <= 0) throw DomainError("FredholmModel: slopes must be positive");
        for (int i = 0; i < q; ++i) {
            bool nonzero = false;
            for (int j = 0; j < q; ++j)
                if (transition(i, j) != 0) nonzero = true;
            if (!nonzero) throw DomainError("FredholmModel: every row of the transition must be nonzero");
        }
    }
};

// 2x2 model of the half-expanding subshift map: cell 1 doubles onto both
// cells, cell 2 translates onto cell 1.
inline FredholmModel subshift_model() {
    FredholmModel m;
    m.q = 2;
    m.slopes = {Rational(2), Rational(1)};
    m.transition = IntMatrix(2);
    m.transition(0, 0) = 1;
    m.transition(0, 1) = 1;
    m.transition(1, 0) = 1;
    m.validate();
    return m;
}

// sigma∘f for f(x)=mx mod 1 on the refined partition of N*m cells, where the
// composite is Markov for every sigma.  N = 1 gives the plain map on m cells.
inline FredholmModel multiply_model(const Permutation& sigma, int m) {
    int N = sigma.degree();
    int q = N * m;
    IntMatrix B(q);
    for (int i = 0; i < q; ++i)
        for (int d = 0; d < m; ++d) B(i, (static_cast<long long>(m) * i + d) % q)++;
    FredholmModel out;
    out.q = q;
    out.slopes.assign(static_cast<size_t>(q), Rational(m));
    out.transition = B * build_Q(sigma, m);
    out.validate();
    return out;
}

// Phi(z)_{ij} = (z/|f'|_i) * transition_{ij}.
inline Eigen::MatrixXcd fredholm_matrix(const FredholmModel& model, Complex z) {
    model.validate();
    Eigen::MatrixXcd M(model.q, model.q);
    for (int i = 0; i < model.q; ++i) {
        Complex w = z / to_double(model.slopes[static_cast<size_t>(i)]);
        for (int j = 0; j < model.q; ++j)
            M(i, j) = w * static_cast<double>(model.transition(i, j));
    }
    return M;
}

inline RatMatrix phi1_rational(const FredholmModel& model) {
    RatMatrix M(model.q, model.q);
    for (int i = 0; i < model.q; ++i)
        for (int j = 0; j < model.q; ++j)
            M(i, j) = Rational(model.transition(i, j)) / model.slopes[static_cast<size_t>(i)];
    return M;
}

// D(z) = det(I - Phi(z)) by complex LU.
inline Complex fredholm_determinant(const FredholmModel& model, Complex z) {
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(model.q, model.q) - fredholm_matrix(model, z);
    return Eigen::PartialPivLU<Eigen::MatrixXcd>(M).determinant();
}

// Exact rational determinant at rational z.
inline Rational fredholm_determinant_rational(const FredholmModel& model, const Rational& z) {
    model.validate();
    RatMatrix M(model.q, model.q);
    for (int i = 0; i < model.q; ++i)
        for (int j = 0; j < model.q; ++j) {
            Rational phi = z / model.slopes[static_cast<size_t>(i)] * model.transition(i, j);
            M(i, j) = (i == j ? Rational(1) - phi : -phi);
        }
    // Rational Gaussian elimination determinant.
    Rational det = 1;
    int n = model.q;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (M(i, k) != 0) { piv = i; break; }
        if (piv < 0) return Rational(0);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(M(piv, j), M(k, j));
            det = -det;
        }
        det *= M(k, k);
        Rational inv = M(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (M(i, k) == 0) continue;
            Rational f = M(i, k) / inv;
            for (int j = k; j < n; ++j) M(i, j) -= f * M(k, j);
        }
    }
    return det;
}

// Zeros of D(z): since Phi(z) = z*Phi(1), D(z) = 0 iff 1/z is a nonzero
// eigenvalue of Phi(1).
inline std::vector<Complex> fredholm_zeros(const FredholmModel& model, double tol = 1e-9) {
    Spectrum s = eigen_spectrum(fredholm_matrix(model, Complex{1.0, 0.0}).real());
    std::vector<Complex> zeros;
    for (const auto& l : s.eigenvalues)
        if (std::abs(l) > tol) zeros.push_back(1.0 / l);
    detail::canonical_sort(zeros);
    return zeros;
}

// Exact invariant density: the left eigenvector v of Phi(1) at eigenvalue 1,
// normalized so that sum_i v_i |I_i| = 1 with equal cells |I_i| = 1/q.
// Returns the density values rho_i = v_i / sum_j |I_j| v_j.  Throws when the
// eigenvalue 1 is not simple (non-ergodic model) instead of picking a
// representative.
inline std::vector<Rational> invariant_density(const FredholmModel& model) {
    model.validate();
    RatMatrix phiT = phi1_rational(model).transposed();
    for (int i = 0; i < model.q; ++i) phiT(i, i) -= 1;
    auto basis = kernel_basis(phiT);
    if (basis.size() != 1)
        throw ComputeError("invariant_density: eigenvalue 1 of Phi(1) is not simple (" +
                           std::to_string(basis.size()) + " ergodic components)");
    std::vector<Rational> v = basis[0];
    Rational mass = 0;  // sum v_i |I_i|
    for (const auto& c : v) mass += c / model.q;
    if (mass == 0) throw ComputeError("invariant_density: degenerate eigenvector");
    if (mass < 0) mass = -mass, std::for_each(v.begin(), v.end(), [](Rational& c) { c = -c; });
    for (auto& c : v) {
        c /= mass;
        if (c < 0) throw ComputeError("invariant_density: eigenvector is not signable to nonnegative");
    }
    return v;
}

// (r_ess, topological entropy): r_ess = exp(-xi) with xi the rho-average of
// log |f'|, and entropy = log of the spectral radius of the transition matrix.
inline std::pair<double, double> r_ess_and_entropy(const FredholmModel& model) {
    auto rho = invariant_density(model);
    double xi = 0;
    for (int i = 0; i < model.q; ++i)
        xi += std::log(to_double(model.slopes[static_cast<size_t>(i)])) * to_double(rho[static_cast<size_t>(i)]) / model.q;
    Spectrum s = eigen_spectrum(model.transition.to_eigen());
    return {std::exp(-xi), std::log(s.spectral_radius())};
}

// Truncation residual | log D(z) + sum_{n<=K} z^n tr(Phi(1)^n) / n |; decays
// like the geometric tail (|z| rho(Phi(1)))^{K+1} / (1 - |z| rho).
inline double zeta_identity_check(const FredholmModel& model, Complex z, int K) {
    if (K < 1) throw DomainError("zeta_identity_check: K must be >= 1");
    Eigen::MatrixXcd phi1 = fredholm_matrix(model, Complex{1.0, 0.0});
    double radius = eigen_spectrum(phi1.real()).spectral_radius();
    if (std::abs(z) * radius >= 1.0)
        throw DomainError("zeta_identity_check: |z| must be below 1/spectral_radius(Phi(1))");
    Complex series = 0;
    Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(model.q, model.q);
    Complex zn = 1;
    for (int n = 1; n <= K; ++n) {
        power = power * phi1;
        zn *= z;
        series += zn * power.trace() / static_cast<double>(n);
    }
    Complex logD = std::log(fredholm_determinant(model, z));
    return std::abs(logD + series);
}

}  // namespace permix
