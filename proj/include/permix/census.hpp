#pragma once

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <random>

#include "permix/classify.hpp"
#include "permix/combinatorics.hpp"
#include "permix/common.hpp"
#include "permix/modpoly.hpp"
#include "permix/parallel.hpp"
#include "permix/permutation.hpp"
#include "permix/rates.hpp"

namespace permix {

struct CensusRow {
    int m = 0, N = 0;
    BigInt total = 0;            // N!
    BigInt nonmixing_count = 0;  // Theorem-2 classifier
    BigInt slow_count = 0;       // mixing sigma with an eigenvalue modulus strictly in (1, m)
    enum class Method { Exhaustive, ClosedForm, MonteCarlo } method = Method::Exhaustive;
};

struct MCEstimate {
    long long samples = 0;
    long long hits = 0;
    double proportion = 0.0;
    double std_error = 0.0;
    std::uint64_t seed = 0;

    static MCEstimate make(long long samples, long long hits, std::uint64_t seed) {
        MCEstimate e;
        e.samples = samples;
        e.hits = hits;
        e.seed = seed;
        e.proportion = static_cast<double>(hits) / static_cast<double>(samples);
        e.std_error = std::sqrt(e.proportion * (1.0 - e.proportion) / static_cast<double>(samples));
        return e;
    }
};

// ---- exact proportions -------------------------------------------------------

// Exhaustive non-mixing proportion p(ell, m) over S_{m*ell}.
inline Rational p_exact_bruteforce(int ell, int m, bool long_run = false, int threads = 0,
                                   int cap = kSweepCapDefault) {
    if (ell < 1 || m < 2) throw DomainError("p_exact_bruteforce: need ell >= 1, m >= 2");
    long long N = static_cast<long long>(m) * ell;
    int limit = long_run ? 12 : cap;
    if (N > limit)
        throw DomainError("p_exact_bruteforce: N = " + std::to_string(N) + " exceeds the cap of " +
                          std::to_string(limit) + (long_run ? "" : " (pass long_run to go to 12)"));
    int n = static_cast<int>(N);
    BigInt total = factorial(n);
    long long total_ll = total.convert_to<long long>();
    int nthreads = resolve_threads(threads);
    int chunks = std::max(1, std::min<long long>(256, total_ll / 1024));
    std::vector<long long> part(static_cast<size_t>(chunks), 0);
    parallel_chunks(total_ll, chunks, nthreads, [&](int c, long long begin, long long end) {
        Permutation p = unrank_permutation(BigInt(begin), n);
        std::vector<int> images = p.images();
        long long cnt = 0;
        for (long long r = begin; r < end; ++r) {
            if (!classify_mixing_fast(Permutation(images), m, n).mixing()) ++cnt;
            std::next_permutation(images.begin(), images.end());
        }
        part[static_cast<size_t>(c)] = cnt;
    });
    BigInt bad = 0;
    for (long long c : part) bad += c;
    return Rational(bad, total);
}

// Closed forms for ell in {1,2,3,4}.  ell = 1 has no nontrivial ell-stable
// decomposition, hence proportion 0.
inline Rational p_closed_form(int ell, int m) {
    if (m < 2) throw DomainError("p_closed_form: m must be >= 2");
    switch (ell) {
        case 1:
            return Rational(0);
        case 2:
            return Rational(1, binomial(2 * m - 1, m));
        case 3:
            return Rational(1, binomial(3 * m - 1, 2 * m));
        case 4: {
            BigInt val = 4 * multinomial({m, m, m}) + 6 * binomial(2 * m, m) * binomial(2 * m, m) -
                         12 * binomial(2 * m, m);
            BigInt num = val * factorial(m) * factorial(m) * factorial(m) * factorial(m);
            return Rational(num, factorial(4 * m));
        }
        default:
            throw DomainError("p_closed_form: no closed form for ell outside {1,2,3,4}");
    }
}

// b_j(ell) = sum over partitions r_1 <= ... <= r_j of ell of
// multinomial(ell; r) / multinomial(m*ell; m*r).
inline Rational b_j_exact(int ell, int m, int j) {
    if (ell < 1 || ell > 40) throw DomainError("b_j_exact: ell out of range (1..40)");
    if (j < 1 || j > ell) throw DomainError("b_j_exact: need 1 <= j <= ell");
    Rational sum = 0;
    for (const auto& parts : partitions_into(ell, j)) {
        std::vector<int> scaled(parts);
        for (int& r : scaled) r *= m;
        sum += Rational(multinomial(parts), multinomial(scaled));
    }
    return sum;
}

inline Rational p_upper_bound_sum(int ell, int m) {
    Rational sum = 0;
    for (int j = 2; j <= ell; ++j) sum += b_j_exact(ell, m, j);
    return sum;
}

// Theorem-3 closed bound, valid for ell >= 6: 11 (2e/ell)^(m-1).
inline double asymp_bound(int ell, int m) {
    if (ell < 6) throw DomainError("asymp_bound: requires ell >= 6");
    return 11.0 * std::pow(2.0 * std::numbers::e / ell, m - 1);
}

// Large-m asymptotic of p(ell,m):
// sqrt(2π(ell-1) ell m) * ((ell-1)^(ell-1)/ell^ell)^m, the dominant
// two-block term with rho = prod (r_i/ell)^{r_i} at r = (1, ell-1).
inline double asymp_large_m(int ell, int m) {
    if (ell < 2) throw DomainError("asymp_large_m: requires ell >= 2");
    double rho = std::pow(ell - 1.0, ell - 1.0) / std::pow(static_cast<double>(ell), ell);
    return std::sqrt(2.0 * std::numbers::pi * (ell - 1.0) * ell * m) * std::pow(rho, m);
}

// ---- censuses ----------------------------------------------------------------

// Exhaustive count over S_N of the sigma that decelerate the mixing (mixing
// and some eigenvalue of A(m,N)P(sigma) of modulus strictly inside (1, m)).
inline CensusRow slowdown_census(int m, int N, bool long_run = false, int threads = 0,
                                 int cap = kCensusCapDefault) {
    if (N < 2 || m < 2) throw DomainError("slowdown_census: need N >= 2, m >= 2");
    int limit = long_run ? 10 : cap;
    if (N > limit)
        throw DomainError("slowdown_census: N exceeds the cap of " + std::to_string(limit));
    CensusRow row;
    row.m = m;
    row.N = N;
    row.total = factorial(N);
    row.method = CensusRow::Method::Exhaustive;
    long long total_ll = row.total.convert_to<long long>();
    int nthreads = resolve_threads(threads);
    int chunks = std::max(1, std::min<long long>(256, total_ll / 512));
    std::vector<long long> slow_part(static_cast<size_t>(chunks), 0), nonmix_part(static_cast<size_t>(chunks), 0);
    IntMatrix A = build_A(m, N);
    parallel_chunks(total_ll, chunks, nthreads, [&](int c, long long begin, long long end) {
        Permutation p = unrank_permutation(BigInt(begin), N);
        std::vector<int> images = p.images();
        long long slow = 0, nonmix = 0;
        for (long long r = begin; r < end; ++r) {
            Permutation sigma{std::vector<int>(images)};
            if (!classify_mixing_fast(sigma, m, N).mixing()) {
                ++nonmix;
            } else {
                IntMatrix AP = A * build_P(sigma);
                if (certify_spectrum_int(AP, m).slower) ++slow;
            }
            std::next_permutation(images.begin(), images.end());
        }
        slow_part[static_cast<size_t>(c)] = slow;
        nonmix_part[static_cast<size_t>(c)] = nonmix;
    });
    for (long long v : slow_part) row.slow_count += v;
    for (long long v : nonmix_part) row.nonmixing_count += v;
    return row;
}

// Seeded Monte Carlo estimate of the decelerating proportion.  PRNG:
// std::mt19937_64 (Mersenne Twister 19937, 64-bit, as pinned by the C++
// standard), one stream per fixed sample chunk seeded with
// seed_seq{seed, chunk}, so results are bit-identical for any thread count.
inline MCEstimate mc_slowdown(int m, int N, long long samples, std::uint64_t seed,
                              int threads = 0) {
    if (samples < 100) throw DomainError("mc_slowdown: need at least 100 samples");
    if (N < 2 || m < 2) throw DomainError("mc_slowdown: need N >= 2, m >= 2");
    constexpr int kChunks = 64;
    int nthreads = resolve_threads(threads);
    std::vector<long long> hits(kChunks, 0);
    IntMatrix A = build_A(m, N);
    parallel_chunks(samples, kChunks, nthreads, [&](int c, long long begin, long long end) {
        // seed_seq keeps 32 bits per element; split the 64-bit seed.
        std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(c)};
        std::mt19937_64 rng(sq);
        long long h = 0;
        for (long long s = begin; s < end; ++s) {
            Permutation sigma = random_permutation(rng, N);
            if (!classify_mixing_fast(sigma, m, N).mixing()) continue;
            IntMatrix AP = A * build_P(sigma);
            if (certify_spectrum_int(AP, m).slower) ++h;
        }
        hits[static_cast<size_t>(c)] = h;
    });
    long long total = 0;
    for (long long h : hits) total += h;
    return MCEstimate::make(samples, total, seed);
}

struct SubshiftCensus {
    CensusRow row;                 // exhaustive non-mixing count (oracle), when within cap
    bool exhaustive = false;
    Rational witness_closed = 0;   // inclusion-exclusion proportion of sigma(j-ell)=j witnesses
    BigInt witness_brute = 0;      // direct count of the witness property
};

inline SubshiftCensus subshift_census(int ell, int threads = 0, int cap = kSweepCapDefault) {
    if (ell < 1) throw DomainError("subshift_census: ell must be >= 1");
    SubshiftCensus out;
    out.witness_closed = subshift_witness_count(ell);
    int N = 2 * ell;
    out.row.m = 2;
    out.row.N = N;
    out.row.total = factorial(N);
    out.row.method = CensusRow::Method::Exhaustive;
    if (N > cap) return out;  // closed-form witness proportion only
    out.exhaustive = true;
    MapFamily fam = MapFamily::subshift(N);
    long long total_ll = out.row.total.convert_to<long long>();
    int nthreads = resolve_threads(threads);
    int chunks = std::max(1, std::min<long long>(256, total_ll / 256));
    std::vector<long long> nonmix(static_cast<size_t>(chunks), 0), wit(static_cast<size_t>(chunks), 0);
    parallel_chunks(total_ll, chunks, nthreads, [&](int c, long long begin, long long end) {
        Permutation p = unrank_permutation(BigInt(begin), N);
        std::vector<int> images = p.images();
        long long nm = 0, w = 0;
        for (long long r = begin; r < end; ++r) {
            Permutation sigma{std::vector<int>(images)};
            if (!classify_mixing_oracle(sigma, fam).mixing()) ++nm;
            for (int j = ell; j < N; ++j)
                if (sigma(j - ell) == j) { ++w; break; }
            std::next_permutation(images.begin(), images.end());
        }
        nonmix[static_cast<size_t>(c)] = nm;
        wit[static_cast<size_t>(c)] = w;
    });
    for (long long v : nonmix) out.row.nonmixing_count += v;
    for (long long v : wit) out.witness_brute += v;
    return out;
}

}  // namespace permix
