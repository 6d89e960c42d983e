#pragma once

#include <array>
#include <optional>
#include <vector>

#include "permix/blocks.hpp"
#include "permix/combinatorics.hpp"
#include "permix/common.hpp"
#include "permix/permutation.hpp"
#include "permix/subsets.hpp"

namespace permix {

struct MixingVerdict {
    enum class Status { Mixing, NonMixing };
    Status status;
    // A nontrivial ell-stable decomposition stabilized by sigma*delta, present
    // iff NonMixing (multiplication family); for the subshift family the
    // witness is the size-stable subset orbit promoted to a decomposition-free
    // marker (no blocks attached).
    std::optional<BlockDecomposition> witness;
    std::optional<bool> ergodic;  // filled by the spectral cross-check only

    bool mixing() const { return status == Status::Mixing; }
};

namespace detail {

// Finest coarsening of the ell cosets of ellZ/NZ into blocks mapped into
// single blocks by pi, via union-find over cosets.  pi permutes the fixpoint
// blocks; the decomposition is nontrivial iff >= 2 classes survive.
class CosetCoarsening {
public:
    CosetCoarsening(const Permutation& pi, int ell) : ell_(ell), parent_(static_cast<size_t>(ell)) {
        int N = pi.degree();
        for (int c = 0; c < ell; ++c) parent_[static_cast<size_t>(c)] = c;
        bool changed = true;
        std::vector<int> image_rep(static_cast<size_t>(ell));
        while (changed) {
            changed = false;
            std::fill(image_rep.begin(), image_rep.end(), -1);
            for (int x = 0; x < N; ++x) {
                int r = find(x % ell);
                int t = find(pi(x) % ell);
                int& ir = image_rep[static_cast<size_t>(r)];
                if (ir == -1) {
                    ir = t;
                } else if (find(ir) != t) {
                    unite(ir, t);
                    changed = true;
                }
            }
        }
    }

    int classes() const {
        int c = 0;
        for (int i = 0; i < ell_; ++i)
            if (find(i) == i) ++c;
        return c;
    }

    BlockDecomposition decomposition(int N) const {
        std::vector<std::vector<int>> by_root(static_cast<size_t>(ell_));
        for (int c = 0; c < ell_; ++c)
            for (int x = c; x < N; x += ell_) by_root[static_cast<size_t>(find(c))].push_back(x);
        std::vector<std::vector<int>> blocks;
        for (auto& b : by_root)
            if (!b.empty()) blocks.push_back(std::move(b));
        return BlockDecomposition(N, std::move(blocks));
    }

private:
    int find(int x) const {
        while (parent_[static_cast<size_t>(x)] != x) {
            parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
            x = parent_[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) const {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent_[static_cast<size_t>(ra)] = rb;
    }

    int ell_;
    mutable std::vector<int> parent_;
};

}  // namespace detail

// Decision procedure for mixing of sigma∘f, f(x)=mx mod 1: if m does not
// divide N the composite is always mixing; otherwise sigma∘f fails to be
// mixing iff sigma*delta stabilizes some nontrivial ell-stable decomposition,
// and the finest such decomposition is returned as witness.
inline MixingVerdict classify_mixing_fast(const Permutation& sigma, int m, int N) {
    if (sigma.degree() != N) throw DomainError("classify_mixing_fast: sigma degree != N");
    if (m < 2) throw DomainError("classify_mixing_fast: m must be >= 2");
    if (N % m != 0) return {MixingVerdict::Status::Mixing, std::nullopt, std::nullopt};
    int ell = N / m;
    Permutation pi = sigma * delta(m, N);
    detail::CosetCoarsening cc(pi, ell);
    if (cc.classes() <= 1) return {MixingVerdict::Status::Mixing, std::nullopt, std::nullopt};
    return {MixingVerdict::Status::NonMixing, cc.decomposition(N), std::nullopt};
}

// Subset-orbit oracle: sigma∘f fails to be (topologically) mixing iff some
// proper nonempty A has #g~^r(A) == #A for all r.  The orbit is followed
// until the size changes (disqualifies A) or a set repeats (qualifies A).
// For the multiplication family sizes are monotone, for the subshift they
// may also decrease; the loop below covers both.
inline MixingVerdict classify_mixing_oracle(const Permutation& sigma, const MapFamily& fam,
                                            int subset_cap = kOracleSubsetCap) {
    int N = fam.N;
    if (sigma.degree() != N) throw DomainError("classify_mixing_oracle: sigma degree != N");
    if (N > subset_cap)
        throw DomainError("classify_mixing_oracle: N exceeds the subset-enumeration bound of " +
                          std::to_string(subset_cap));

    // Per-singleton images of one g~ step, so an orbit step is an OR of lookups.
    std::vector<Mask> step(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) step[static_cast<size_t>(i)] = tilde_g(Mask{1} << i, sigma, fam);

    std::vector<Mask> orbit;
    Mask full = full_mask(N);
    for (Mask A = 1; A < full; ++A) {
        int size = std::popcount(A);
        Mask cur = A;
        orbit.clear();
        orbit.push_back(cur);
        for (;;) {
            Mask next = 0;
            Mask rest = cur;
            while (rest) {
                int b = std::countr_zero(rest);
                rest &= rest - 1;
                next |= step[static_cast<size_t>(b)];
            }
            if (std::popcount(next) != size) break;  // size moved; A disqualified
            bool seen = false;
            for (Mask s : orbit)
                if (s == next) { seen = true; break; }
            if (seen) {
                // Size-stable cycle found: non-mixing.
                std::optional<BlockDecomposition> witness;
                if (fam.kind == MapFamily::Kind::MultiplyMod1 && N % fam.m == 0) {
                    auto v = classify_mixing_fast(sigma, fam.m, N);
                    witness = v.witness;
                }
                return {MixingVerdict::Status::NonMixing, witness, std::nullopt};
            }
            orbit.push_back(next);
            cur = next;
        }
    }
    return {MixingVerdict::Status::Mixing, std::nullopt, std::nullopt};
}

// Proportion of sigma in S_{2*ell} with sigma(j-ell) = j for at least one
// j >= ell (each such sigma makes the subshift composite non-mixing and
// non-ergodic), by inclusion-exclusion:  sum_{k>=1} (-1)^{k-1} C(ell,k)
// (2ell-k)!/(2ell)!.
inline Rational subshift_witness_count(int ell) {
    if (ell < 1) throw DomainError("subshift_witness_count: ell must be >= 1");
    Rational total = 0;
    BigInt denom = factorial(2 * ell);
    for (int k = 1; k <= ell; ++k) {
        Rational term(binomial(ell, k) * factorial(2 * ell - k), denom);
        if (k % 2 == 1)
            total += term;
        else
            total -= term;
    }
    return total;
}

}  // namespace permix
