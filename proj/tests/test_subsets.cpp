#include <catch2/catch_amalgamated.hpp>

#include "permix/subsets.hpp"

using namespace permix;

namespace {

bool union_of_cosets(Mask A, int ell, int N) {
    for (int x = 0; x < N; ++x) {
        bool a = A >> x & 1;
        bool b = A >> ((x + ell) % N) & 1;
        if (a != b) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("tilde_f worked examples") {
    REQUIRE(tilde_f(vector_to_mask({0}), 2, 6) == vector_to_mask({0, 1}));
    REQUIRE(tilde_f(vector_to_mask({0, 3}), 2, 6) == vector_to_mask({0, 1}));
    REQUIRE(tilde_f(vector_to_mask({0, 1, 2, 3, 4}), 3, 5) == full_mask(5));
    REQUIRE(tilde_f(0, 3, 7) == 0);
}

TEST_CASE("tilde_g worked examples") {
    REQUIRE(tilde_g(vector_to_mask({1}), Permutation::identity(4), MapFamily::multiply(2, 4)) ==
            vector_to_mask({2, 3}));
    // Subshift with ell = 2: the three cells {0, 2, 3} collapse onto {0, 1}.
    REQUIRE(tilde_g(vector_to_mask({0, 2, 3}), Permutation::identity(4), MapFamily::subshift(4)) ==
            vector_to_mask({0, 1}));
    // sigma(j - ell) = j pins the singleton {j}.
    Permutation sigma = Permutation::parse("[2,1,0,3]");  // sigma(0) = 2 = j with ell = 2
    REQUIRE(tilde_g(vector_to_mask({2}), sigma, MapFamily::subshift(4)) == vector_to_mask({2}));
}

TEST_CASE("cardinality bounds #A <= #f~(A) <= m #A") {
    for (int N = 2; N <= 10; ++N) {
        for (int m = 2; m <= 5; ++m) {
            for (Mask A = 0; A <= full_mask(N); ++A) {
                int a = std::popcount(A);
                int fa = std::popcount(tilde_f(A, m, N));
                REQUIRE(a <= fa);
                REQUIRE(fa <= std::min(m * a, N));
            }
        }
    }
}

TEST_CASE("size equality holds exactly on coset unions when m | N, never otherwise") {
    for (int N = 2; N <= 12; ++N) {
        for (int m = 2; m <= 4; ++m) {
            bool divides = N % m == 0;
            int ell = divides ? N / m : 0;
            for (Mask A = 1; A < full_mask(N); ++A) {
                bool equal = std::popcount(tilde_f(A, m, N)) == std::popcount(A);
                bool cosets = divides && union_of_cosets(A, ell, N);
                REQUIRE(equal == cosets);
            }
        }
    }
}

TEST_CASE("#g~(A) >= #A for every sigma, multiplication family") {
    std::mt19937_64 rng(11);
    for (int N = 2; N <= 10; ++N) {
        for (int m = 2; m <= 4; ++m) {
            MapFamily fam = MapFamily::multiply(m, N);
            for (int t = 0; t < 20; ++t) {
                Permutation sigma = t == 0 ? Permutation::identity(N) : random_permutation(rng, N);
                for (Mask A = 0; A <= full_mask(N); ++A)
                    REQUIRE(std::popcount(tilde_g(A, sigma, fam)) >= std::popcount(A));
            }
        }
    }
}

TEST_CASE("equivalence: size-stable <=> coset union <=> g~ acts as sigma*delta") {
    std::mt19937_64 rng(23);
    for (int m = 2; m <= 4; ++m) {
        for (int ell = 1; m * ell <= 12; ++ell) {
            int N = m * ell;
            MapFamily fam = MapFamily::multiply(m, N);
            Permutation d = delta(m, N);
            for (int t = 0; t < 5; ++t) {
                Permutation sigma = random_permutation(rng, N);
                Permutation sd = sigma * d;
                for (Mask A = 1; A < full_mask(N); ++A) {
                    Mask g = tilde_g(A, sigma, fam);
                    bool i = std::popcount(g) == std::popcount(A);
                    bool ii = union_of_cosets(A, ell, N);
                    Mask sdA = 0;
                    for (int x : mask_to_vector(A)) sdA |= Mask{1} << sd(x);
                    bool iii = sdA == g;
                    REQUIRE(i == ii);
                    REQUIRE(ii == iii);
                }
            }
        }
    }
}

TEST_CASE("map family invariants") {
    REQUIRE_THROWS_AS(MapFamily::multiply(1, 4), DomainError);
    REQUIRE_THROWS_AS(MapFamily::subshift(5), DomainError);
}
