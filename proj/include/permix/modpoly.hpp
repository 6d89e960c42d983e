#pragma once

#include <cstdint>
#include <vector>

#include "permix/common.hpp"
#include "permix/intmatrix.hpp"
#include "permix/polynomial.hpp"

namespace permix {

// Characteristic polynomials and the slowdown certificate modulo large fixed
// primes.  Divisibility over Z implies divisibility mod p, so a certificate
// that deflates fully mod p certifies "not slower" deterministically; spurious
// mod-p divisibility (probability ~ deg/p per trial) is caught by running two
// primes and falling back to exact arithmetic on disagreement.
namespace modp {

inline constexpr std::uint64_t kPrime1 = (std::uint64_t{1} << 61) - 1;
inline constexpr std::uint64_t kPrime2 = 9223372036854775783ULL;  // largest prime < 2^63

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

inline std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r);
}

// charpoly mod p via Hessenberg similarity reduction + the leading-minor
// recurrence.  O(n^3).  Coefficients leading-first, monic.
inline std::vector<std::uint64_t> charpoly_mod_p(const IntMatrix& M, std::uint64_t p) {
    int n = M.dim();
    std::vector<std::uint64_t> H(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) H[static_cast<size_t>(i) * n + j] = reduce(M(i, j), p);
    auto at = [&](int i, int j) -> std::uint64_t& { return H[static_cast<size_t>(i) * n + j]; };

    for (int j = 0; j + 2 < n; ++j) {
        int piv = -1;
        for (int i = j + 1; i < n; ++i)
            if (at(i, j) != 0) { piv = i; break; }
        if (piv == -1) continue;
        if (piv != j + 1) {
            for (int t = 0; t < n; ++t) std::swap(at(piv, t), at(j + 1, t));
            for (int t = 0; t < n; ++t) std::swap(at(t, piv), at(t, j + 1));
        }
        std::uint64_t inv = invmod(at(j + 1, j), p);
        for (int i = j + 2; i < n; ++i) {
            if (at(i, j) == 0) continue;
            std::uint64_t f = mulmod(at(i, j), inv, p);
            for (int t = 0; t < n; ++t)
                at(i, t) = (at(i, t) + p - mulmod(f, at(j + 1, t), p)) % p;
            for (int t = 0; t < n; ++t)
                at(t, j + 1) = (at(t, j + 1) + mulmod(f, at(t, i), p)) % p;
        }
    }

    // p_k = (x - h_{kk}) p_{k-1} - sum_i h_{k-i,k} (prod subdiagonals) p_{k-i-1}
    std::vector<std::vector<std::uint64_t>> pk(static_cast<size_t>(n) + 1);
    pk[0] = {1};
    for (int k = 1; k <= n; ++k) {
        const auto& prev = pk[static_cast<size_t>(k - 1)];
        std::vector<std::uint64_t> cur(static_cast<size_t>(k) + 1, 0);
        std::uint64_t hkk = at(k - 1, k - 1);
        for (size_t t = 0; t < prev.size(); ++t) {
            cur[t] = (cur[t] + prev[t]) % p;  // x * prev
            cur[t + 1] = (cur[t + 1] + p - mulmod(hkk, prev[t], p)) % p;
        }
        std::uint64_t chain = 1;
        for (int i = 1; i < k; ++i) {
            chain = mulmod(chain, at(k - i, k - i - 1), p);
            if (chain == 0) break;
            std::uint64_t h = at(k - i - 1, k - 1);
            if (h == 0) continue;
            std::uint64_t c = mulmod(chain, h, p);
            const auto& pki = pk[static_cast<size_t>(k - i - 1)];
            size_t off = cur.size() - pki.size();
            for (size_t t = 0; t < pki.size(); ++t)
                cur[off + t] = (cur[off + t] + p - mulmod(c, pki[t], p)) % p;
        }
        pk[static_cast<size_t>(k)] = std::move(cur);
    }
    return pk[static_cast<size_t>(n)];
}

inline bool poly_divide_exact_mod_p(const std::vector<std::uint64_t>& poly,
                                    const std::vector<std::uint64_t>& d,
                                    std::vector<std::uint64_t>& q, std::uint64_t p) {
    q.clear();
    if (poly.size() < d.size()) return false;
    std::vector<std::uint64_t> r = poly;
    size_t dn = d.size() - 1;
    while (r.size() >= d.size()) {
        std::uint64_t c = r[0];  // divisor monic
        q.push_back(c);
        if (c != 0)
            for (size_t i = 0; i <= dn; ++i) r[i] = (r[i] + p - mulmod(c, d[i], p)) % p;
        r.erase(r.begin());
    }
    for (std::uint64_t c : r)
        if (c != 0) { q.clear(); return false; }
    return true;
}

inline SpectrumCertificate certify_spectrum_mod_p(std::vector<std::uint64_t> poly, int m,
                                                  std::uint64_t p) {
    SpectrumCertificate cert;
    int n = static_cast<int>(poly.size()) - 1;
    while (poly.size() > 1 && poly.back() == 0) {
        poly.pop_back();
        ++cert.zero_mult;
    }
    const auto& table = detail::cyclotomic_table();
    std::vector<std::uint64_t> q;
    bool changed = true;
    while (changed && poly.size() > 1) {
        changed = false;
        for (int k = 1; k < static_cast<int>(table.size()); ++k) {
            const auto& cyc = table[static_cast<size_t>(k)];
            if (cyc.size() > poly.size()) continue;
            int deg = static_cast<int>(cyc.size()) - 1;
            std::vector<std::uint64_t> cp(cyc.size()), sp(cyc.size());
            std::uint64_t scale = 1;
            for (size_t i = 0; i < cyc.size(); ++i) {
                cp[i] = reduce(cyc[i], p);
                sp[i] = mulmod(cp[i], scale, p);
                scale = mulmod(scale, static_cast<std::uint64_t>(m), p);
            }
            if (poly_divide_exact_mod_p(poly, cp, q, p)) {
                cert.inner_circle_mult += deg;
                poly = q;
                changed = true;
                break;
            }
            if (poly_divide_exact_mod_p(poly, sp, q, p)) {
                cert.unit_circle_mult += deg;
                poly = q;
                changed = true;
                break;
            }
        }
    }
    cert.remainder_degree = static_cast<int>(poly.size()) - 1;
    cert.slower = cert.remainder_degree > 0;
    (void)n;
    return cert;
}

}  // namespace modp

// Certified slowdown classification for matrices too large for int64
// charpolys: two independent primes must agree, otherwise the exact BigInt
// path settles it.
inline SpectrumCertificate certify_spectrum_int(const IntMatrix& M, int m) {
    if (M.dim() <= 8 && m <= 6) return certify_spectrum(charpoly_int64(M), m);
    auto c1 = modp::certify_spectrum_mod_p(modp::charpoly_mod_p(M, modp::kPrime1), m, modp::kPrime1);
    auto c2 = modp::certify_spectrum_mod_p(modp::charpoly_mod_p(M, modp::kPrime2), m, modp::kPrime2);
    if (c1.slower == c2.slower && c1.unit_circle_mult == c2.unit_circle_mult &&
        c1.zero_mult == c2.zero_mult && c1.inner_circle_mult == c2.inner_circle_mult)
        return c1;
    return certify_spectrum(charpoly_big(M), m);
}

}  // namespace permix
