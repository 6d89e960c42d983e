#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <numbers>

#include "permix/rates.hpp"

using namespace permix;

TEST_CASE("lambda of the identity on its natural cell count is zero") {
    for (int m : {2, 3, 5}) {
        RateReport rep = lambda_sigma(Permutation::identity(m), m, m);
        REQUIRE(rep.lambda_sigma == 0.0);
        REQUIRE(rep.spectral_mixing);
        REQUIRE(rep.eigenvalue_1_multiplicity == 1);
        REQUIRE(rep.r_ess == 1.0 / m);
        REQUIRE_FALSE(rep.decelerating);
    }
}

TEST_CASE("worst permutations and bounds") {
    Permutation t25 = worst_permutation(2, 5);
    REQUIRE(t25.images() == std::vector<int>{0, 3, 1, 4, 2});
    Permutation t35 = worst_permutation(3, 5);
    REQUIRE(t35.images() == std::vector<int>{0, 2, 4, 1, 3});
    Permutation t23 = worst_permutation(2, 3);
    REQUIRE(t23.images() == std::vector<int>{0, 2, 1});

    REQUIRE(std::abs(worst_rate_bound(2, 3) - 0.5) < 1e-15);
    REQUIRE(std::abs(worst_rate_bound(2, 5) - std::cos(std::numbers::pi / 5)) < 1e-15);
    REQUIRE(std::abs(worst_rate_bound(2, 5) - 0.8090169943749475) < 1e-12);

    RateReport rep = lambda_sigma(t25, 2, 5);
    REQUIRE(std::abs(rep.lambda_sigma - worst_rate_bound(2, 5)) < 1e-10);
    REQUIRE(rep.decelerating);

    REQUIRE_THROWS_AS(worst_permutation(2, 4), DomainError);
    REQUIRE_THROWS_AS(worst_rate_bound(2, 4), DomainError);
    REQUIRE_THROWS_AS(worst_rate_bound(3, 2), DomainError);
}

TEST_CASE("P(tau) A(m,N) equals C(m,N) for the worst permutation") {
    for (auto [m, N] : std::vector<std::pair<int, int>>{{2, 5}, {3, 5}, {2, 3}, {3, 8}, {4, 7}, {5, 12}}) {
        Permutation tau = worst_permutation(m, N);
        REQUIRE(build_P(tau) * build_A(m, N) == build_C(m, N));
    }
}

TEST_CASE("non-mixing report for the delta-inverse example") {
    Permutation sigma = delta(2, 4).inverse();
    RateReport rep = lambda_sigma(sigma, 2, 4);
    REQUIRE_FALSE(rep.spectral_mixing);
    REQUIRE(rep.unit_circle_count >= 2);
    REQUIRE(rep.eigenvalue_1_multiplicity == 2);
    REQUIRE_FALSE(rep.decelerating);
}

TEST_CASE("stochastic eta worked examples") {
    // eta of the scaled circulant: sqrt(eta) = |sin(m pi/N)/(m sin(pi/N))|
    for (auto [m, N] : std::vector<std::pair<int, int>>{{2, 5}, {3, 5}, {2, 7}, {3, 8}}) {
        Eigen::MatrixXd B = build_C(m, N).to_eigen() / m;
        double target = std::abs(std::sin(m * std::numbers::pi / N) / (m * std::sin(std::numbers::pi / N)));
        REQUIRE(std::abs(std::sqrt(stochastic_eta(B)) - target) < 1e-12);
    }
    // rank-one averaging kills V_0
    int n = 6;
    Eigen::MatrixXd ones = Eigen::MatrixXd::Constant(n, n, 1.0 / n);
    REQUIRE(stochastic_eta(ones) < 1e-12);
    // orthogonal matrices preserve norms
    Eigen::MatrixXd P = build_P(Permutation::parse("[2,0,1,3]")).to_eigen();
    REQUIRE(std::abs(stochastic_eta(P) - 1.0) < 1e-12);
    // rejects non-column-stochastic input
    Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(3, 3) * 1.5;
    REQUIRE_THROWS_AS(stochastic_eta(bad), DomainError);
}

TEST_CASE("column-stochastic times orthogonal: |eig on V_0| <= sqrt(eta)") {
    std::mt19937_64 rng(41);
    auto unit_double = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int t = 0; t < 1000; ++t) {
        int n = 2 + static_cast<int>(bounded_uint(rng, 15));
        Eigen::MatrixXd B(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) B(i, j) = unit_double() + 1e-6;
        for (int j = 0; j < n; ++j) B.col(j) /= B.col(j).sum();
        double eta = stochastic_eta(B);
        Eigen::MatrixXd P = build_P(random_permutation(rng, n)).to_eigen();
        for (const auto& l : spectrum_on_v0(B * P))
            REQUIRE(std::abs(l) <= std::sqrt(eta) + 1e-10);
    }
}

TEST_CASE("sqrt(eta) equals the max V_0 eigenvalue modulus for circulants") {
    for (auto [m, N] : std::vector<std::pair<int, int>>{{2, 5}, {3, 7}, {4, 9}}) {
        Eigen::MatrixXd B = build_C(m, N).to_eigen() / m;
        double eta = stochastic_eta(B);
        double maxmod = 0;
        for (const auto& l : spectrum_on_v0(B)) maxmod = std::max(maxmod, std::abs(l));
        REQUIRE(std::abs(std::sqrt(eta) - maxmod) < 1e-10);
    }
}

TEST_CASE("algebraic integer structure of the charpoly") {
    auto chk = algebraic_eigenvalue_check(Permutation::identity(3), 2, 3);
    REQUIRE(chk.ok());
    REQUIRE(chk.charpoly == Poly<BigInt>{1, -2, -1, 2});  // (x-2)(x-1)(x+1)

    auto chk35 = algebraic_eigenvalue_check(Permutation::identity(5), 3, 5);
    REQUIRE(chk35.ok());
    // (x-3)(x^2+1)(x-1)(x+1) = x^5 - 3x^4 - 3x^2 ... verify via division by (x-3)
    REQUIRE(chk35.quotient == Poly<BigInt>{1, 0, 0, 0, -1});  // (x^2+1)(x^2-1) = x^4 - 1

    std::mt19937_64 rng(43);
    for (int t = 0; t < 50; ++t) {
        Permutation sigma = random_permutation(rng, 7);
        REQUIRE(algebraic_eigenvalue_check(sigma, 2, 7).ok());
    }
    REQUIRE_THROWS_AS(algebraic_eigenvalue_check(Permutation::identity(4), 2, 4), DomainError);
}

TEST_CASE("density evolution worked examples") {
    // equilibrium after finitely many steps: fitted factor 0
    REQUIRE(density_evolution_rate(Permutation::identity(2), 2, 2, 60) == 0.0);
    // worst permutation of (2,5): fitted factor ~ 0.809
    Permutation tau = worst_permutation(2, 5);
    double fit = density_evolution_rate(tau, 2, 5, 200, 9);
    REQUIRE(std::abs(fit - 0.8090169943749475) < 0.8090169943749475 * 0.05);
    // non-mixing input rejected
    REQUIRE_THROWS_AS(density_evolution_rate(delta(2, 4).inverse(), 2, 4, 100), DomainError);
    REQUIRE_THROWS_AS(density_evolution_rate(Permutation::identity(2), 2, 2, 5), DomainError);
}

TEST_CASE("numeric path beyond the exact cap") {
    std::mt19937_64 rng(47);
    Permutation sigma = random_permutation(rng, 20);
    RateReport rep = lambda_sigma(sigma, 2, 20);
    REQUIRE_FALSE(rep.exact_path);
    REQUIRE(rep.lambda_sigma <= 1.0);
    REQUIRE(rep.lambda_sigma >= 0.0);
    REQUIRE(rep.r_ess == 0.5);
}
