#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "permix/common.hpp"
#include "permix/permutation.hpp"

namespace permix {

// Subsets of Z/NZ as bit masks, index i <-> bit i.  N <= 64.
using Mask = std::uint64_t;

inline Mask full_mask(int N) {
    return N >= 64 ? ~Mask{0} : (Mask{1} << N) - 1;
}

inline std::vector<int> mask_to_vector(Mask A) {
    std::vector<int> v;
    while (A) {
        int b = std::countr_zero(A);
        v.push_back(b);
        A &= A - 1;
    }
    return v;
}

inline Mask vector_to_mask(const std::vector<int>& v) {
    Mask A = 0;
    for (int i : v) A |= Mask{1} << i;
    return A;
}

// Which interval family the permutation is composed with.
struct MapFamily {
    enum class Kind { MultiplyMod1, SubshiftExample };
    Kind kind;
    int m;  // slope of the multiplication family; unused for the subshift
    int N;  // number of equal subintervals

    static MapFamily multiply(int m, int N) {
        if (m < 2) throw DomainError("MultiplyMod1 requires m >= 2");
        if (N < 2) throw DomainError("MultiplyMod1 requires N >= 2");
        return {Kind::MultiplyMod1, m, N};
    }
    static MapFamily subshift(int N) {
        if (N < 2 || N % 2 != 0) throw DomainError("SubshiftExample requires even N = 2*ell");
        return {Kind::SubshiftExample, 0, N};
    }
};

// f~(A) = union over d in [0,m) of (m*A + d) in Z/NZ.
inline Mask tilde_f(Mask A, int m, int N) {
    if (N > 64) throw DomainError("tilde_f: N must be <= 64 for mask subsets");
    Mask out = 0;
    Mask rest = A & full_mask(N);
    while (rest) {
        int a = std::countr_zero(rest);
        rest &= rest - 1;
        long long base = static_cast<long long>(m) * a;
        for (int d = 0; d < m; ++d) out |= Mask{1} << ((base + d) % N);
    }
    return out;
}

// One g~ step of g = sigma∘f on subinterval index sets.
inline Mask tilde_g(Mask A, const Permutation& sigma, const MapFamily& fam) {
    int N = fam.N;
    if (sigma.degree() != N) throw DomainError("tilde_g: sigma degree must equal N");
    if (fam.kind == MapFamily::Kind::MultiplyMod1) {
        Mask F = tilde_f(A, fam.m, N);
        Mask out = 0;
        while (F) {
            int b = std::countr_zero(F);
            F &= F - 1;
            out |= Mask{1} << sigma(b);
        }
        return out;
    }
    // Subshift: cells j < ell double onto {2j, 2j+1}; cells j >= ell translate
    // onto j - ell; sigma is applied after.
    int ell = N / 2;
    Mask out = 0;
    Mask rest = A & full_mask(N);
    while (rest) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        if (j < ell) {
            out |= Mask{1} << sigma(2 * j);
            out |= Mask{1} << sigma(2 * j + 1);
        } else {
            out |= Mask{1} << sigma(j - ell);
        }
    }
    return out;
}

}  // namespace permix
