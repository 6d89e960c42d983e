#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "permix/common.hpp"

namespace permix {

// A permutation of {0..n-1}, stored as its image list.  sigma(i) == images[i].
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        validate();
    }

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<size_t>(n));
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    // (a*b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.degree() != b.degree())
            throw DomainError("permutation degree mismatch in composition");
        std::vector<int> v(a.images_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.images_[static_cast<size_t>(b.images_[i])];
        return Permutation(std::move(v));
    }

    Permutation inverse() const {
        std::vector<int> v(images_.size());
        for (size_t i = 0; i < images_.size(); ++i) v[static_cast<size_t>(images_[i])] = static_cast<int>(i);
        return Permutation(std::move(v));
    }

    bool operator==(const Permutation& o) const { return images_ == o.images_; }

    // One-line image form: [0,2,1,3]
    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (size_t i = 0; i < images_.size(); ++i) {
            if (i) os << ',';
            os << images_[i];
        }
        os << ']';
        return os.str();
    }

    // Accepts image form "[0,2,1,3]" and cycle form "(0 1 2)(5 6)"; cycle form
    // needs the degree. Fixed points may be omitted in cycle form.
    static Permutation parse(const std::string& text, int degree_hint = -1) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)) || c == ' ') s += c;
        size_t start = s.find_first_not_of(' ');
        if (start == std::string::npos) throw DomainError("empty permutation literal");
        if (s[start] == '[') return parse_images(s);
        if (s[start] == '(') return parse_cycles(s, degree_hint);
        throw DomainError("permutation literal must start with '[' or '('");
    }

private:
    void validate() const {
        std::vector<char> seen(images_.size(), 0);
        for (int v : images_) {
            if (v < 0 || v >= degree() || seen[static_cast<size_t>(v)])
                throw DomainError("images are not a bijection of {0..n-1}");
            seen[static_cast<size_t>(v)] = 1;
        }
        if (images_.empty()) throw DomainError("permutation degree must be positive");
    }

    static Permutation parse_images(const std::string& s) {
        std::vector<int> v;
        std::string token;
        for (char c : s) {
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
                token += c;
            } else {
                if (!token.empty()) { v.push_back(std::stoi(token)); token.clear(); }
            }
        }
        if (!token.empty()) v.push_back(std::stoi(token));
        return Permutation(std::move(v));
    }

    static Permutation parse_cycles(const std::string& s, int degree_hint) {
        std::vector<std::vector<int>> cycles;
        std::vector<int> cur;
        std::string token;
        bool in_cycle = false;
        int max_el = -1;
        auto flush = [&]() {
            if (!token.empty()) {
                cur.push_back(std::stoi(token));
                max_el = std::max(max_el, cur.back());
                token.clear();
            }
        };
        for (char c : s) {
            if (c == '(') { in_cycle = true; cur.clear(); }
            else if (c == ')') { flush(); cycles.push_back(cur); in_cycle = false; }
            else if (std::isdigit(static_cast<unsigned char>(c))) token += c;
            else if (c == ' ' || c == ',') flush();
            else throw DomainError("bad character in cycle literal");
        }
        if (in_cycle) throw DomainError("unbalanced parenthesis in cycle literal");
        int n = degree_hint > 0 ? degree_hint : max_el + 1;
        if (max_el >= n) throw DomainError("cycle entry exceeds permutation degree");
        std::vector<int> v(static_cast<size_t>(n));
        std::iota(v.begin(), v.end(), 0);
        for (const auto& cyc : cycles) {
            for (size_t i = 0; i < cyc.size(); ++i)
                v[static_cast<size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
        }
        return Permutation(std::move(v));
    }

    std::vector<int> images_;
};

// The delta permutation of the multiplication family: for N = m*ell and
// i = j + c*ell (0 <= c < m, 0 <= j < ell), delta(i) = m*j + c.  It satisfies
// f(I_j) ⊇ I_{delta(j)} for f(x) = mx mod 1 on the N equal subintervals.
inline Permutation delta(int m, int N) {
    if (m < 2) throw DomainError("delta: m must be >= 2");
    if (N < 1 || N % m != 0) throw DomainError("delta: N must be a positive multiple of m");
    int ell = N / m;
    std::vector<int> v(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) {
        int j = i % ell, c = i / ell;
        v[static_cast<size_t>(i)] = m * j + c;
    }
    return Permutation(std::move(v));
}

// Portable uniform integer in [0, bound) by bitmask rejection; avoids the
// implementation-defined std::uniform_int_distribution.
inline std::uint64_t bounded_uint(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
    for (;;) {
        std::uint64_t r = rng() & mask;
        if (r < bound) return r;
    }
}

// Fisher-Yates shuffle of the identity, driven by mt19937_64.
inline Permutation random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(bounded_uint(rng, static_cast<std::uint64_t>(i) + 1));
        std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]);
    }
    return Permutation(std::move(v));
}

// Permutation with rank `index` (factorial number system) in lexicographic
// order on S_n; lets exhaustive sweeps start mid-stream.
inline Permutation unrank_permutation(BigInt index, int n) {
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<BigInt> fact(static_cast<size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i) fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * i;
    std::vector<int> v;
    v.reserve(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        BigInt f = fact[static_cast<size_t>(i)];
        int k = static_cast<int>(index / f);
        index %= f;
        v.push_back(pool[static_cast<size_t>(k)]);
        pool.erase(pool.begin() + k);
    }
    return Permutation(std::move(v));
}

}  // namespace permix
