#pragma once

#include <functional>
#include <vector>

#include "permix/common.hpp"

namespace permix {

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// (sum parts)! / prod parts!
inline BigInt multinomial(const std::vector<int>& parts) {
    int total = 0;
    for (int p : parts) total += p;
    BigInt r = factorial(total);
    for (int p : parts) r /= factorial(p);
    return r;
}

// All partitions of n into exactly j parts, nondecreasing, each >= min_part.
inline void partitions_into(int n, int j, int min_part,
                            std::vector<int>& cur,
                            const std::function<void(const std::vector<int>&)>& emit) {
    if (j == 1) {
        if (n >= min_part) {
            cur.push_back(n);
            emit(cur);
            cur.pop_back();
        }
        return;
    }
    for (int r = min_part; r * j <= n; ++r) {
        cur.push_back(r);
        partitions_into(n - r, j - 1, r, cur, emit);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> partitions_into(int n, int j) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_into(n, j, 1, cur, [&](const std::vector<int>& p) { out.push_back(p); });
    return out;
}

}  // namespace permix
