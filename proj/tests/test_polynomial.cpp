#include <catch2/catch_amalgamated.hpp>

#include "permix/modpoly.hpp"
#include "permix/permutation.hpp"
#include "permix/polynomial.hpp"

using namespace permix;

namespace {

IntMatrix random_small_matrix(std::mt19937_64& rng, int n, int lo, int hi) {
    IntMatrix M(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            M(i, j) = lo + static_cast<std::int64_t>(bounded_uint(rng, static_cast<std::uint64_t>(hi - lo + 1)));
    return M;
}

Poly<BigInt> to_big(const Poly<std::int64_t>& p) { return Poly<BigInt>(p.begin(), p.end()); }

}  // namespace

TEST_CASE("charpoly of known matrices") {
    // A(2,3): (x-2)(x-1)(x+1) = x^3 - 2x^2 - x + 2
    REQUIRE(charpoly_int64(build_A(2, 3)) == Poly<std::int64_t>{1, -2, -1, 2});
    // identity 3x3: (x-1)^3
    IntMatrix I(3);
    for (int i = 0; i < 3; ++i) I(i, i) = 1;
    REQUIRE(charpoly_int64(I) == Poly<std::int64_t>{1, -3, 3, -1});
}

TEST_CASE("int64 and BigInt charpolys agree on the census range") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
        int m = 2 + static_cast<int>(bounded_uint(rng, 5));  // up to 6: the int64 fast-path domain
        int N = 2 + static_cast<int>(bounded_uint(rng, 7));
        Permutation sigma = random_permutation(rng, N);
        IntMatrix AP = build_AP(sigma, m);
        REQUIRE(to_big(charpoly_int64(AP)) == charpoly_big(AP));
    }
}

TEST_CASE("cyclotomic table sanity") {
    REQUIRE(cyclotomic(1) == Poly<std::int64_t>{1, -1});
    REQUIRE(cyclotomic(2) == Poly<std::int64_t>{1, 1});
    REQUIRE(cyclotomic(4) == Poly<std::int64_t>{1, 0, 1});
    REQUIRE(cyclotomic(6) == Poly<std::int64_t>{1, -1, 1});
    REQUIRE(cyclotomic(12) == Poly<std::int64_t>{1, 0, -1, 0, 1});
    // Phi_105 is the first with a coefficient of modulus 2
    const auto& c105 = cyclotomic(105);
    REQUIRE(*std::min_element(c105.begin(), c105.end()) == -2);
}

TEST_CASE("scaled cyclotomic is the minimal polynomial of m*root-of-unity") {
    // k=1, m=3: x - 3; k=4, m=2: x^2 + 4
    REQUIRE(scaled_cyclotomic<std::int64_t>(1, 3) == Poly<std::int64_t>{1, -3});
    REQUIRE(scaled_cyclotomic<std::int64_t>(4, 2) == Poly<std::int64_t>{1, 0, 4});
}

TEST_CASE("spectrum certificate on hand-built polynomials") {
    // (x-2)(x-1)(x+1): unit-circle mult 1 (the 2), inner-circle 2, not slower (m=2)
    auto cert = certify_spectrum(Poly<std::int64_t>{1, -2, -1, 2}, 2);
    REQUIRE_FALSE(cert.slower);
    REQUIRE(cert.unit_circle_mult == 1);
    REQUIRE(cert.inner_circle_mult == 2);
    REQUIRE(cert.zero_mult == 0);

    // (x-2)(x^2-2): the sqrt(2) pair sits strictly inside (1, 2)
    cert = certify_spectrum(Poly<std::int64_t>{1, -2, -2, 4}, 2);
    REQUIRE(cert.slower);
    REQUIRE(cert.remainder_degree == 2);

    // x^3 (x-2)^2: zero mult 3, eigenvalue 2 with multiplicity 2 is on the scaled circle
    cert = certify_spectrum(Poly<std::int64_t>{1, -4, 4, 0, 0, 0}, 2);
    REQUIRE_FALSE(cert.slower);
    REQUIRE(cert.zero_mult == 3);
    REQUIRE(cert.unit_circle_mult == 2);

    // (x-2)(x^3+x^2-x-2): the cubic has a complex pair of modulus ~1.288
    cert = certify_spectrum(Poly<std::int64_t>{1, -1, -3, 0, 4}, 2);
    REQUIRE(cert.slower);
    REQUIRE(cert.remainder_degree == 3);
}

TEST_CASE("certificate against the classifier semantics at (2,8) sample") {
    // One of the 3072 permutations with top interior modulus 1.288... at (2,8).
    Permutation sigma = Permutation::parse("[2,7,3,4,0,6,1,5]");
    auto cert = certify_spectrum(charpoly_int64(build_AP(sigma, 2)), 2);
    REQUIRE(cert.slower);
}

TEST_CASE("Yun squarefree decomposition") {
    // (x-1)^2 (x+2)^3 = expand
    Poly<BigInt> p{1};
    auto mul = [&](const Poly<BigInt>& f) {
        Poly<BigInt> r(p.size() + f.size() - 1, BigInt(0));
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = 0; j < f.size(); ++j) r[i + j] += p[i] * f[j];
        p = r;
    };
    mul({1, -1});
    mul({1, -1});
    mul({1, 2});
    mul({1, 2});
    mul({1, 2});
    auto sq = squarefree_decomposition(p);
    REQUIRE(sq.size() == 2);
    REQUIRE(sq[0].first == Poly<BigInt>{1, -1});
    REQUIRE(sq[0].second == 2);
    REQUIRE(sq[1].first == Poly<BigInt>{1, 2});
    REQUIRE(sq[1].second == 3);

    // squarefree input comes back whole
    auto sq2 = squarefree_decomposition(Poly<BigInt>{1, 0, -2});
    REQUIRE(sq2.size() == 1);
    REQUIRE(sq2[0].second == 1);
}

TEST_CASE("mod-p charpoly matches the exact one") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 120; ++t) {
        int n = 2 + static_cast<int>(bounded_uint(rng, 15));
        IntMatrix M = random_small_matrix(rng, n, -3, 5);
        Poly<BigInt> exact = charpoly_big(M);
        for (std::uint64_t p : {modp::kPrime1, modp::kPrime2}) {
            auto mod = modp::charpoly_mod_p(M, p);
            REQUIRE(mod.size() == exact.size());
            for (size_t i = 0; i < mod.size(); ++i) {
                BigInt r = exact[i] % p;
                if (r < 0) r += p;
                REQUIRE(BigInt(mod[i]) == r);
            }
        }
    }
}

TEST_CASE("mod-p certificate agrees with the exact certificate") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        int m = 2 + static_cast<int>(bounded_uint(rng, 3));
        int N = 2 + static_cast<int>(bounded_uint(rng, 10));
        Permutation sigma = random_permutation(rng, N);
        IntMatrix AP = build_AP(sigma, m);
        auto exact = certify_spectrum(charpoly_big(AP), m);
        auto modded = certify_spectrum_int(AP, m);
        REQUIRE(exact.slower == modded.slower);
        REQUIRE(exact.unit_circle_mult == modded.unit_circle_mult);
        REQUIRE(exact.zero_mult == modded.zero_mult);
        REQUIRE(exact.inner_circle_mult == modded.inner_circle_mult);
    }
}

TEST_CASE("poly division guards") {
    Poly<std::int64_t> q;
    REQUIRE_THROWS_AS(poly_divide_exact(Poly<std::int64_t>{1, 0}, Poly<std::int64_t>{2, 1}, q),
                      DomainError);
    REQUIRE(poly_divide_exact(Poly<std::int64_t>{1, -3, 2}, Poly<std::int64_t>{1, -1}, q));
    REQUIRE(q == Poly<std::int64_t>{1, -2});
    REQUIRE_FALSE(poly_divide_exact(Poly<std::int64_t>{1, 0, 1}, Poly<std::int64_t>{1, -1}, q));
}
