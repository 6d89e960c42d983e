#pragma once

#include <vector>

#include "permix/common.hpp"
#include "permix/intmatrix.hpp"

namespace permix {

// Dense rational matrix, row-major; only the handful of exact-kernel
// operations the spectral layer needs.
class RatMatrix {
public:
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static RatMatrix from_int(const IntMatrix& M) {
        RatMatrix r(M.dim(), M.dim());
        for (int i = 0; i < M.dim(); ++i)
            for (int j = 0; j < M.dim(); ++j) r(i, j) = M(i, j);
        return r;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    RatMatrix transposed() const {
        RatMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    // In-place row echelon; returns rank.
    int echelon() {
        int rank = 0;
        for (int col = 0; col < cols_ && rank < rows_; ++col) {
            int piv = -1;
            for (int i = rank; i < rows_; ++i)
                if ((*this)(i, col) != 0) { piv = i; break; }
            if (piv < 0) continue;
            if (piv != rank)
                for (int j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(rank, j));
            Rational inv = (*this)(rank, col);
            for (int j = col; j < cols_; ++j) (*this)(rank, j) /= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == rank || (*this)(i, col) == 0) continue;
                Rational f = (*this)(i, col);
                for (int j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(rank, j);
            }
            ++rank;
        }
        return rank;
    }

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

inline int rational_rank(RatMatrix M) { return M.echelon(); }

inline int kernel_dimension(const RatMatrix& M) { return M.cols() - rational_rank(M); }

// Basis of the right kernel (as rows of the returned vectors).
inline std::vector<std::vector<Rational>> kernel_basis(RatMatrix M) {
    int rows = M.rows(), cols = M.cols();
    M.echelon();
    std::vector<int> pivot_col;
    std::vector<char> is_pivot(static_cast<size_t>(cols), 0);
    for (int i = 0; i < rows; ++i) {
        int col = -1;
        for (int j = 0; j < cols; ++j)
            if (M(i, j) != 0) { col = j; break; }
        if (col >= 0) {
            pivot_col.push_back(col);
            is_pivot[static_cast<size_t>(col)] = 1;
        }
    }
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<size_t>(cols), Rational(0));
        v[static_cast<size_t>(free)] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v[static_cast<size_t>(pivot_col[r])] = -M(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Geometric multiplicity of eigenvalue `lambda` of an integer matrix, i.e.
// dim ker(lambda*I - M) over Q.
inline int eigenvalue_kernel_dimension(const IntMatrix& M, const Rational& lambda) {
    RatMatrix A(M.dim(), M.dim());
    for (int i = 0; i < M.dim(); ++i)
        for (int j = 0; j < M.dim(); ++j) A(i, j) = (i == j ? lambda - M(i, j) : Rational(-M(i, j)));
    return kernel_dimension(A);
}

// Fraction-free Bareiss determinant of an integer matrix.
inline BigInt integer_determinant(const IntMatrix& M) {
    int n = M.dim();
    if (n == 0) return 1;
    std::vector<BigInt> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = M(i, j);
    auto at = [&](int i, int j) -> BigInt& { return a[static_cast<size_t>(i) * n + j]; };
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

}  // namespace permix
