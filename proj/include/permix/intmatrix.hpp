#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "permix/common.hpp"
#include "permix/permutation.hpp"

namespace permix {

// Dense square integer matrix, row-major.  All transition matrices of the
// multiplication and subshift families live here with exact entries.
class IntMatrix {
public:
    IntMatrix() : dim_(0) {}
    explicit IntMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim, 0) {}

    int dim() const { return dim_; }
    std::int64_t& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    std::int64_t operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

    bool operator==(const IntMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }

    IntMatrix operator*(const IntMatrix& o) const {
        IntMatrix r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) {
                std::int64_t v = (*this)(i, k);
                if (!v) continue;
                for (int j = 0; j < dim_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

    Eigen::MatrixXd to_eigen() const {
        Eigen::MatrixXd M(dim_, dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) M(i, j) = static_cast<double>((*this)(i, j));
        return M;
    }

    std::vector<std::int64_t> row_sums() const {
        std::vector<std::int64_t> s(static_cast<size_t>(dim_), 0);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) s[static_cast<size_t>(i)] += (*this)(i, j);
        return s;
    }

    std::vector<std::int64_t> col_sums() const {
        std::vector<std::int64_t> s(static_cast<size_t>(dim_), 0);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) s[static_cast<size_t>(j)] += (*this)(i, j);
        return s;
    }

    std::string to_csv() const {
        std::ostringstream os;
        for (int i = 0; i < dim_; ++i) {
            for (int j = 0; j < dim_; ++j) {
                if (j) os << ',';
                os << (*this)(i, j);
            }
            os << '\n';
        }
        return os.str();
    }

private:
    int dim_;
    std::vector<std::int64_t> a_;
};

inline void check_dims(int m, int N, int cap = kDefaultDimCap) {
    if (m < 2) throw DomainError("m must be >= 2");
    if (N < 2) throw DomainError("N must be >= 2");
    if (static_cast<long long>(N) * m > cap)
        throw DomainError("matrix dimension N*m exceeds the configured cap of " + std::to_string(cap));
}

// Transition matrix of f(x)=mx mod 1 on the N equal cells: entry (i,j) counts
// the d in [0,m) with j == m*i+d mod N.  This is the paper's 0/1 matrix for
// m <= N; for m > N branches wrap and entries exceed 1 so that all row and
// column sums stay equal to m.
inline IntMatrix build_A(int m, int N, int cap = kDefaultDimCap) {
    check_dims(m, N, cap);
    IntMatrix M(N);
    for (int i = 0; i < N; ++i)
        for (int d = 0; d < m; ++d) M(i, (static_cast<long long>(m) * i + d) % N)++;
    return M;
}

// Same map on the refined partition of N*m cells (always 0/1).
inline IntMatrix build_B(int m, int N, int cap = kDefaultDimCap) {
    check_dims(m, N, cap);
    int q = N * m;
    IntMatrix M(q);
    for (int i = 0; i < q; ++i)
        for (int d = 0; d < m; ++d) M(i, (static_cast<long long>(m) * i + d) % q)++;
    return M;
}

// Circulant with m consecutive ones per row: entry (i,j) counts r in [0,m)
// with j == i+r mod N.
inline IntMatrix build_C(int m, int N, int cap = kDefaultDimCap) {
    check_dims(m, N, cap);
    if (m > N) throw DomainError("build_C requires m <= N");
    IntMatrix M(N);
    for (int i = 0; i < N; ++i)
        for (int r = 0; r < m; ++r) M(i, (i + r) % N)++;
    return M;
}

// Permutation matrix P(sigma)_{ij} = [j == sigma(i)].
inline IntMatrix build_P(const Permutation& sigma) {
    IntMatrix M(sigma.degree());
    for (int i = 0; i < sigma.degree(); ++i) M(i, sigma(i)) = 1;
    return M;
}

// Block version: each 1 of P(sigma) becomes an m x m identity block.
inline IntMatrix build_Q(const Permutation& sigma, int m) {
    int N = sigma.degree();
    IntMatrix M(N * m);
    for (int i = 0; i < N; ++i)
        for (int t = 0; t < m; ++t) M(i * m + t, sigma(i) * m + t) = 1;
    return M;
}

// State transition matrix of sigma∘f on the coarse partition.
inline IntMatrix build_AP(const Permutation& sigma, int m, int cap = kDefaultDimCap) {
    return build_A(m, sigma.degree(), cap) * build_P(sigma);
}

// Same on the refined partition where sigma∘f is Markov.
inline IntMatrix build_BQ(const Permutation& sigma, int m, int cap = kDefaultDimCap) {
    return build_B(m, sigma.degree(), cap) * build_Q(sigma, m);
}

}  // namespace permix
