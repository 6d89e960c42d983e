#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

#include "permix/common.hpp"
#include "permix/intmatrix.hpp"

namespace permix {

// Integer polynomials, coefficients leading-first.
template <typename T>
using Poly = std::vector<T>;

template <typename T>
inline int poly_degree(const Poly<T>& p) { return static_cast<int>(p.size()) - 1; }

// Exact division by a monic divisor; returns false (and leaves q empty) if the
// remainder is nonzero.
template <typename T>
inline bool poly_divide_exact(const Poly<T>& p, const Poly<T>& d, Poly<T>& q) {
    q.clear();
    if (d.empty() || d[0] != T(1)) throw DomainError("poly_divide_exact: divisor must be monic");
    if (p.size() < d.size()) return false;
    Poly<T> r = p;
    size_t dn = d.size() - 1;
    q.reserve(p.size() - d.size() + 1);
    while (r.size() >= d.size()) {
        T c = r[0];
        q.push_back(c);
        for (size_t i = 0; i <= dn; ++i) r[i] -= c * d[i];
        r.erase(r.begin());
    }
    for (const T& c : r)
        if (c != T(0)) { q.clear(); return false; }
    return true;
}

// Characteristic polynomial by Faddeev-LeVerrier.  T must hold the
// intermediate entries exactly (int64 is checked safe for dim <= 8, entries
// <= 6 by the cross-validation tests; use BigInt beyond that).
template <typename T>
inline Poly<T> charpoly_faddeev(const IntMatrix& M) {
    int n = M.dim();
    std::vector<T> Mk(static_cast<size_t>(n) * n), tmp(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Mk[static_cast<size_t>(i) * n + j] = T(M(i, j));
    Poly<T> coeffs;
    coeffs.reserve(static_cast<size_t>(n) + 1);
    coeffs.push_back(T(1));
    for (int k = 1; k <= n; ++k) {
        T tr = T(0);
        for (int i = 0; i < n; ++i) tr += Mk[static_cast<size_t>(i) * n + i];
        T ck = -tr / T(k);  // exact: trace of the Faddeev iterate is divisible by k
        coeffs.push_back(ck);
        if (k == n) break;
        for (int i = 0; i < n; ++i) Mk[static_cast<size_t>(i) * n + i] += ck;
        // tmp = M * Mk
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                T acc = T(0);
                for (int l = 0; l < n; ++l)
                    if (M(i, l)) acc += T(M(i, l)) * Mk[static_cast<size_t>(l) * n + j];
                tmp[static_cast<size_t>(i) * n + j] = acc;
            }
        std::swap(Mk, tmp);
    }
    return coeffs;
}

inline Poly<std::int64_t> charpoly_int64(const IntMatrix& M) {
    return charpoly_faddeev<std::int64_t>(M);
}

inline Poly<BigInt> charpoly_big(const IntMatrix& M) {
    return charpoly_faddeev<BigInt>(M);
}

// --- cyclotomic polynomials -------------------------------------------------

namespace detail {

inline std::vector<Poly<std::int64_t>> build_cyclotomic_table(int max_k) {
    std::vector<Poly<std::int64_t>> table(static_cast<size_t>(max_k) + 1);
    for (int k = 1; k <= max_k; ++k) {
        Poly<std::int64_t> num(static_cast<size_t>(k) + 1, 0);
        num[0] = 1;
        num[static_cast<size_t>(k)] = -1;  // x^k - 1
        for (int d = 1; d < k; ++d) {
            if (k % d == 0) {
                Poly<std::int64_t> q;
                bool ok = poly_divide_exact(num, table[static_cast<size_t>(d)], q);
                assert(ok);
                (void)ok;
                num = std::move(q);
            }
        }
        table[static_cast<size_t>(k)] = std::move(num);
    }
    return table;
}

// Cyclotomics Phi_k for k up to 270 cover every phi(k) <= 64.
inline const std::vector<Poly<std::int64_t>>& cyclotomic_table() {
    static const std::vector<Poly<std::int64_t>> table = build_cyclotomic_table(270);
    return table;
}

}  // namespace detail

inline const Poly<std::int64_t>& cyclotomic(int k) {
    const auto& t = detail::cyclotomic_table();
    if (k < 1 || k >= static_cast<int>(t.size())) throw DomainError("cyclotomic: k out of range");
    return t[static_cast<size_t>(k)];
}

// m^deg * Phi_k(x/m): minimal polynomial of m times a primitive k-th root of
// unity.  Monic with integer coefficients.
template <typename T>
inline Poly<T> scaled_cyclotomic(int k, int m) {
    const auto& c = cyclotomic(k);
    Poly<T> out(c.size());
    T scale = T(1);
    for (size_t i = 0; i < c.size(); ++i) {
        out[i] = T(c[i]) * scale;
        scale *= T(m);
    }
    return out;
}

// --- the slowdown certificate ------------------------------------------------

// Exact classification of the transition-matrix spectrum of sigma∘f.  The
// charpoly of A(m,N)P(sigma) is deflated by x (zero eigenvalues), by every
// cyclotomic Phi_k (eigenvalues on the inner circle |λ|=1), and by every
// m-scaled cyclotomic (eigenvalues of modulus exactly m, the unit circle of
// the scaled operator).  A nontrivial remainder is equivalent to an
// eigenvalue of modulus strictly between 1 and m, i.e. a mixing rate strictly
// worse than 1/m.
struct SpectrumCertificate {
    bool slower = false;        // some eigenvalue modulus strictly in (1, m)
    int unit_circle_mult = 0;   // total multiplicity of modulus-m eigenvalues (includes m itself)
    int zero_mult = 0;          // multiplicity of the eigenvalue 0
    int inner_circle_mult = 0;  // total multiplicity of root-of-unity eigenvalues (modulus 1)
    int remainder_degree = 0;
};

template <typename T>
inline SpectrumCertificate certify_spectrum(Poly<T> p, int m) {
    SpectrumCertificate cert;
    int n = poly_degree(p);
    while (poly_degree(p) > 0 && p.back() == T(0)) {
        p.pop_back();
        ++cert.zero_mult;
    }
    bool changed = true;
    Poly<T> q;
    const auto& table = detail::cyclotomic_table();
    while (changed && poly_degree(p) > 0) {
        changed = false;
        for (int k = 1; k < static_cast<int>(table.size()); ++k) {
            const auto& cyc = table[static_cast<size_t>(k)];
            int deg = static_cast<int>(cyc.size()) - 1;
            if (deg > poly_degree(p)) continue;
            Poly<T> cycT(cyc.begin(), cyc.end());
            if (poly_divide_exact(p, cycT, q)) {
                cert.inner_circle_mult += deg;
                p = std::move(q);
                changed = true;
                break;
            }
            Poly<T> sc = scaled_cyclotomic<T>(k, m);
            if (poly_divide_exact(p, sc, q)) {
                cert.unit_circle_mult += deg;
                p = std::move(q);
                changed = true;
                break;
            }
        }
    }
    cert.remainder_degree = poly_degree(p);
    cert.slower = cert.remainder_degree > 0;
    assert(cert.zero_mult + cert.inner_circle_mult + cert.unit_circle_mult + cert.remainder_degree == n);
    return cert;
}

// --- squarefree decomposition (Yun) ------------------------------------------

namespace detail {

inline BigInt poly_content(const Poly<BigInt>& p) {
    BigInt g = 0;
    for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
    return g == 0 ? BigInt(1) : g;
}

inline Poly<BigInt> poly_primitive(Poly<BigInt> p) {
    while (!p.empty() && p[0] == 0) p.erase(p.begin());
    if (p.empty()) return p;
    BigInt g = poly_content(p);
    if (p[0] < 0) g = -g;
    for (auto& c : p) c /= g;
    return p;
}

inline Poly<BigInt> poly_derivative(const Poly<BigInt>& p) {
    int n = poly_degree(p);
    if (n <= 0) return {};
    Poly<BigInt> d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = p[static_cast<size_t>(i)] * (n - i);
    return d;
}

// Pseudo-remainder of a by b (lc(b)^k * a mod b).
inline Poly<BigInt> poly_prem(Poly<BigInt> a, const Poly<BigInt>& b) {
    if (b.empty()) throw DomainError("poly_prem: division by zero polynomial");
    BigInt lb = b[0];
    while (a.size() >= b.size()) {
        BigInt la = a[0];
        for (auto& c : a) c *= lb;
        for (size_t i = 0; i < b.size(); ++i) a[i] -= la * b[i];
        while (!a.empty() && a[0] == 0) a.erase(a.begin());
        if (a.empty()) break;
    }
    return a;
}

// Primitive-PRS gcd; result is primitive with positive leading coefficient.
inline Poly<BigInt> poly_gcd(Poly<BigInt> a, Poly<BigInt> b) {
    a = poly_primitive(std::move(a));
    b = poly_primitive(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        Poly<BigInt> r = poly_primitive(poly_prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Exact quotient for known-divisible (possibly non-monic) divisor.
inline Poly<BigInt> poly_quotient(const Poly<BigInt>& p, const Poly<BigInt>& d) {
    Poly<BigInt> r = p, q;
    while (r.size() >= d.size()) {
        BigInt c = r[0] / d[0];
        q.push_back(c);
        for (size_t i = 0; i < d.size(); ++i) r[i] -= c * d[i];
        if (r[0] != 0) throw ComputeError("poly_quotient: inexact division");
        r.erase(r.begin());
    }
    return q;
}

}  // namespace detail

// Yun squarefree decomposition of a primitive integer polynomial:
// p = prod factors[i].first ^ factors[i].second with squarefree, pairwise
// coprime factors.
inline std::vector<std::pair<Poly<BigInt>, int>> squarefree_decomposition(Poly<BigInt> p) {
    using detail::poly_derivative;
    using detail::poly_gcd;
    using detail::poly_primitive;
    using detail::poly_quotient;

    std::vector<std::pair<Poly<BigInt>, int>> out;
    p = poly_primitive(std::move(p));
    if (poly_degree(p) <= 0) return out;
    Poly<BigInt> dp = poly_derivative(p);
    Poly<BigInt> a = poly_gcd(p, dp);
    if (poly_degree(a) == 0) {
        out.emplace_back(std::move(p), 1);
        return out;
    }
    Poly<BigInt> b = poly_quotient(p, a);
    Poly<BigInt> c = poly_quotient(dp, a);
    int i = 1;
    for (;;) {
        // d = c - b'
        Poly<BigInt> db = poly_derivative(b);
        Poly<BigInt> d(std::max(c.size(), db.size()), BigInt(0));
        size_t off_c = d.size() - c.size(), off_b = d.size() - db.size();
        for (size_t t = 0; t < c.size(); ++t) d[off_c + t] += c[t];
        for (size_t t = 0; t < db.size(); ++t) d[off_b + t] -= db[t];
        while (!d.empty() && d[0] == 0) d.erase(d.begin());
        if (poly_degree(b) <= 0) break;
        Poly<BigInt> qi = poly_gcd(b, d);
        if (poly_degree(qi) > 0) out.emplace_back(qi, i);
        b = poly_quotient(b, qi);
        c = poly_quotient(d, qi);
        ++i;
    }
    return out;
}

// Evaluate an integer polynomial at a real point (double arithmetic).
inline double poly_eval(const Poly<BigInt>& p, double x) {
    double acc = 0;
    for (const auto& c : p) acc = acc * x + c.convert_to<double>();
    return acc;
}

}  // namespace permix
