#include <catch2/catch_amalgamated.hpp>

#include "permix/permutation.hpp"

using namespace permix;

TEST_CASE("permutation validation rejects non-bijections") {
    REQUIRE_THROWS_AS(Permutation({0, 0, 1}), DomainError);
    REQUIRE_THROWS_AS(Permutation({0, 3, 1}), DomainError);
    REQUIRE_THROWS_AS(Permutation(std::vector<int>{}), DomainError);
}

TEST_CASE("sorted images of any permutation are 0..n-1") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(bounded_uint(rng, 12));
        Permutation p = random_permutation(rng, n);
        std::vector<int> sorted = p.images();
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i) REQUIRE(sorted[static_cast<size_t>(i)] == i);
    }
}

TEST_CASE("composition and inverse") {
    Permutation a = Permutation::parse("[1,2,0]");
    Permutation b = Permutation::parse("[0,2,1]");
    Permutation ab = a * b;  // a(b(i))
    REQUIRE(ab.images() == std::vector<int>{1, 0, 2});
    REQUIRE((a * a.inverse()) == Permutation::identity(3));
    REQUIRE((a.inverse() * a) == Permutation::identity(3));
}

TEST_CASE("literal parsing: images and cycles") {
    REQUIRE(Permutation::parse("[0,2,1,3]").images() == std::vector<int>{0, 2, 1, 3});
    REQUIRE(Permutation::parse("(0 1 2)", 3).images() == std::vector<int>{1, 2, 0});
    REQUIRE(Permutation::parse("(1 2)", 4).images() == std::vector<int>{0, 2, 1, 3});
    REQUIRE(Permutation::parse("(0 1)(2 3)").images() == std::vector<int>{1, 0, 3, 2});
    REQUIRE(Permutation::parse(" [ 0 , 1 ] ").degree() == 2);
    REQUIRE_THROWS_AS(Permutation::parse("0,1,2"), DomainError);
    REQUIRE_THROWS_AS(Permutation::parse("(0 1", 3), DomainError);
}

TEST_CASE("string round-trip") {
    Permutation p = Permutation::parse("[3,0,2,1]");
    REQUIRE(Permutation::parse(p.to_string()) == p);
}

TEST_CASE("delta images") {
    REQUIRE(delta(2, 4).images() == std::vector<int>{0, 2, 1, 3});
    REQUIRE(delta(2, 6).images() == std::vector<int>{0, 2, 4, 1, 3, 5});
    REQUIRE(delta(3, 3).images() == std::vector<int>{0, 1, 2});
    REQUIRE_THROWS_AS(delta(2, 5), DomainError);
    REQUIRE_THROWS_AS(delta(1, 4), DomainError);
}

// Interval-arithmetic oracle for the covering property f(I_j) ⊇ I_{delta(j)}:
// the image of [j/N, (j+1)/N) under x -> m x mod 1 must contain
// [d/N, (d+1)/N) as a subinterval of one of its wrapped pieces.
static bool image_covers(int m, int N, int j, int d) {
    Rational lo(static_cast<long long>(m) * j, N);
    Rational hi(static_cast<long long>(m) * (j + 1), N);
    Rational tlo(d, N), thi(d + 1, N);
    for (long long k = 0; Rational(k) < hi; ++k) {
        if (lo <= tlo + k && thi + k <= hi) return true;
    }
    return false;
}

TEST_CASE("delta covering property, exhaustive m <= 5, ell <= 5") {
    for (int m = 2; m <= 5; ++m) {
        for (int ell = 1; ell <= 5; ++ell) {
            int N = m * ell;
            Permutation d = delta(m, N);
            for (int j = 0; j < N; ++j) REQUIRE(image_covers(m, N, j, d(j)));
        }
    }
}

TEST_CASE("unrank agrees with lexicographic iteration") {
    int n = 5;
    std::vector<int> images(static_cast<size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    long long rank = 0;
    do {
        if (rank % 17 == 0)
            REQUIRE(unrank_permutation(BigInt(rank), n).images() == images);
        ++rank;
    } while (std::next_permutation(images.begin(), images.end()));
    REQUIRE(rank == 120);
}

TEST_CASE("bounded_uint stays in range and is deterministic") {
    std::mt19937_64 a(42), b(42);
    for (int t = 0; t < 1000; ++t) {
        std::uint64_t x = bounded_uint(a, 7);
        REQUIRE(x < 7);
        REQUIRE(x == bounded_uint(b, 7));
    }
}
