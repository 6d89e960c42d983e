#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "permix/combinatorics.hpp"
#include "permix/common.hpp"
#include "permix/subsets.hpp"

namespace permix {

// A partition of {0..n-1} into disjoint nonempty blocks.
class BlockDecomposition {
public:
    BlockDecomposition(int n, std::vector<std::vector<int>> blocks)
        : n_(n), blocks_(std::move(blocks)) {
        normalize();
        validate();
    }

    int ground_size() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    bool trivial() const { return blocks_.size() == 1; }

    // Every block closed under addition of ell mod n, i.e. a union of cosets
    // of ell*Z/nZ.
    bool ell_stable(int ell) const {
        std::vector<int> owner(static_cast<size_t>(n_));
        for (size_t b = 0; b < blocks_.size(); ++b)
            for (int x : blocks_[b]) owner[static_cast<size_t>(x)] = static_cast<int>(b);
        for (int x = 0; x < n_; ++x)
            if (owner[static_cast<size_t>(x)] != owner[static_cast<size_t>((x + ell) % n_)]) return false;
        return true;
    }

    bool operator==(const BlockDecomposition& o) const {
        return n_ == o.n_ && blocks_ == o.blocks_;
    }

    // True iff sigma maps every block onto a block.
    bool stabilized_by(const Permutation& sigma) const {
        if (sigma.degree() != n_) return false;
        std::vector<Mask> masks;
        masks.reserve(blocks_.size());
        for (const auto& b : blocks_) masks.push_back(vector_to_mask(b));
        for (const auto& b : blocks_) {
            Mask img = 0;
            for (int x : b) img |= Mask{1} << sigma(x);
            if (std::find(masks.begin(), masks.end(), img) == masks.end()) return false;
        }
        return true;
    }

private:
    void normalize() {
        for (auto& b : blocks_) std::sort(b.begin(), b.end());
        std::sort(blocks_.begin(), blocks_.end());
    }

    void validate() const {
        if (n_ < 1) throw DomainError("block decomposition needs a nonempty ground set");
        std::vector<char> seen(static_cast<size_t>(n_), 0);
        int total = 0;
        for (const auto& b : blocks_) {
            if (b.empty()) throw DomainError("blocks must be nonempty");
            for (int x : b) {
                if (x < 0 || x >= n_ || seen[static_cast<size_t>(x)])
                    throw DomainError("blocks must partition {0..n-1}");
                seen[static_cast<size_t>(x)] = 1;
                ++total;
            }
        }
        if (total != n_) throw DomainError("blocks must cover {0..n-1}");
    }

    int n_;
    std::vector<std::vector<int>> blocks_;
};

// Order of the stabiliser G_B of an ell-stable decomposition with block sizes
// m*r_1..m*r_j:  d(r_1..r_j) * prod (m*r_h)!  where d = prod_i n_i! over the
// multiplicities n_i = #{h : r_h = i}.
inline BigInt stabilizer_order(const BlockDecomposition& B, int m) {
    if (m < 2) throw DomainError("stabilizer_order: m must be >= 2");
    if (B.ground_size() % m != 0)
        throw DomainError("stabilizer_order: ground set size must be a multiple of m");
    int ell = B.ground_size() / m;
    if (!B.ell_stable(ell)) throw DomainError("stabilizer_order: decomposition is not ell-stable");
    std::map<int, int> mult;  // r value -> count
    BigInt order = 1;
    for (const auto& blk : B.blocks()) {
        int size = static_cast<int>(blk.size());
        if (size % m != 0) throw DomainError("stabilizer_order: block size not a multiple of m");
        mult[size / m]++;
        order *= factorial(size);
    }
    for (const auto& [r, cnt] : mult) order *= factorial(cnt);
    return order;
}

}  // namespace permix
