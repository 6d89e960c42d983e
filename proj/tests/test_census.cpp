#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <numbers>

#include "permix/census.hpp"
#include "permix/json_io.hpp"

using namespace permix;

TEST_CASE("closed-form proportions") {
    REQUIRE(p_closed_form(1, 2) == 0);
    REQUIRE(p_closed_form(2, 2) == Rational(1, 3));
    REQUIRE(p_closed_form(3, 2) == Rational(1, 5));
    REQUIRE(p_closed_form(4, 2) == Rational(1, 5));
    REQUIRE(p_closed_form(2, 3) == Rational(1, 10));
    REQUIRE(p_closed_form(3, 3) == Rational(1, 28));
    REQUIRE(p_closed_form(4, 3) == Rational(37, 1540));
    REQUIRE_THROWS_AS(p_closed_form(5, 2), DomainError);
}

TEST_CASE("exhaustive sweeps match the closed forms") {
    REQUIRE(p_exact_bruteforce(2, 2) == Rational(1, 3));
    REQUIRE(p_exact_bruteforce(3, 2) == Rational(1, 5));
    REQUIRE(p_exact_bruteforce(2, 3) == Rational(1, 10));
    REQUIRE(p_exact_bruteforce(4, 2) == Rational(1, 5));
    REQUIRE(p_exact_bruteforce(3, 3) == Rational(1, 28));
    REQUIRE_THROWS_AS(p_exact_bruteforce(6, 2), DomainError);  // N = 12 needs long_run
}

TEST_CASE("b_j values and bounds") {
    // b_1 = 1 for every ell
    for (int ell : {1, 2, 5, 9}) REQUIRE(b_j_exact(ell, 3, 1) == 1);
    // b_2(2, m) = 2 / C(2m, m)
    for (int m = 2; m <= 6; ++m)
        REQUIRE(b_j_exact(2, m, 2) == Rational(2, binomial(2 * m, m)));
    REQUIRE(b_j_exact(2, 2, 2) == Rational(1, 3));

    // chain p <= sum_{j>=2} b_j at the exactly-known points
    for (auto [ell, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}}) {
        REQUIRE(p_closed_form(ell, m) <= p_upper_bound_sum(ell, m));
    }

    // the b_j lemma, checked exactly with a small float slack
    for (int m : {2, 3, 4}) {
        for (int ell = 1; ell <= 20; ++ell) {
            for (int j = 1; j <= ell; ++j) {
                double bound = std::pow(2.0 * std::numbers::e / ell, (m - 1.0) * (j - 1.0));
                REQUIRE(to_double(b_j_exact(ell, m, j)) <= bound + 1e-15);
            }
        }
    }
}

TEST_CASE("asymptotic bounds") {
    REQUIRE(std::abs(asymp_bound(6, 2) - 11.0 * (2 * std::numbers::e / 6)) < 1e-12);
    REQUIRE(std::abs(asymp_bound(6, 4) - 11.0 * std::pow(2 * std::numbers::e / 6, 3)) < 1e-12);
    REQUIRE_THROWS_AS(asymp_bound(5, 2), DomainError);
    for (int m : {2, 3, 4}) REQUIRE(to_double(p_upper_bound_sum(6, m)) < asymp_bound(6, m));

    // large-m asymptotics: within 5 percent at m = 40 for ell = 2, 3, 4
    for (int ell : {2, 3, 4}) {
        double ratio = to_double(p_closed_form(ell, 40)) / asymp_large_m(ell, 40);
        REQUIRE(std::abs(ratio - 1.0) < 0.05);
    }
}

TEST_CASE("slowdown census small rows") {
    REQUIRE(slowdown_census(2, 4).slow_count == 0);
    REQUIRE(slowdown_census(2, 4).nonmixing_count == 8);  // p(2,2) = 1/3 of 24
    CensusRow r46 = slowdown_census(4, 6);
    REQUIRE(r46.slow_count == 144);
    REQUIRE(r46.nonmixing_count == 0);  // 4 does not divide 6
    REQUIRE(r46.total == 720);
    REQUIRE_THROWS_AS(slowdown_census(2, 9), DomainError);
}

TEST_CASE("monte carlo determinism and thread independence") {
    MCEstimate a = mc_slowdown(2, 8, 600, 12345, 1);
    MCEstimate b = mc_slowdown(2, 8, 600, 12345, 4);
    MCEstimate c = mc_slowdown(2, 8, 600, 12345, 3);
    REQUIRE(a.hits == b.hits);
    REQUIRE(a.hits == c.hits);
    REQUIRE(a.proportion == b.proportion);
    MCEstimate d = mc_slowdown(2, 8, 600, 54321, 4);
    REQUIRE(a.hits != d.hits);  // different seed, different sample (overwhelmingly)
    REQUIRE(a.std_error == Catch::Approx(std::sqrt(a.proportion * (1 - a.proportion) / 600.0)));
}

TEST_CASE("monte carlo consistency with the exhaustive census at (2,8)") {
    MCEstimate e = mc_slowdown(2, 8, 10000, 99991);
    double reference = 16890.0 / 40320.0;
    REQUIRE(std::abs(e.proportion - reference) < 4 * e.std_error + 1e-3);
}

TEST_CASE("subshift censuses") {
    SubshiftCensus c1 = subshift_census(1);
    REQUIRE(c1.witness_closed == Rational(1, 2));
    REQUIRE(c1.row.nonmixing_count == 1);  // only the swap in S_2
    SubshiftCensus c2 = subshift_census(2);
    REQUIRE(c2.witness_closed == Rational(5, 12));
    REQUIRE(Rational(c2.witness_brute, c2.row.total) == Rational(5, 12));
    REQUIRE(Rational(c2.row.nonmixing_count, c2.row.total) == Rational(2, 3));
    SubshiftCensus big = subshift_census(12);
    REQUIRE_FALSE(big.exhaustive);
    REQUIRE(big.witness_closed > Rational(3, 8));
}

TEST_CASE("json serialization shapes") {
    Json j = to_json(mc_slowdown(2, 6, 200, 7));
    REQUIRE(j["samples"] == 200);
    REQUIRE(j.contains("proportion"));
    Json row = to_json(slowdown_census(2, 4));
    REQUIRE(row["slow_count"] == "0");
    REQUIRE(row["method"] == "exhaustive");
    Permutation p = Permutation::parse("[1,0,2]");
    REQUIRE(permutation_from_json(to_json(p)) == p);
    Json verdict = to_json(classify_mixing_fast(delta(2, 4).inverse(), 2, 4));
    REQUIRE(verdict["status"] == "non_mixing");
    REQUIRE(verdict["witness"].dump() == "[[0,2],[1,3]]");
}
