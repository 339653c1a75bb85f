#pragma once

// Small exact linear algebra over Scalar: products, Gauss-Jordan inverse,
// reduced row echelon kernels.

#include "hopfeq/field.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hopfeq {

using Matrix = std::vector<std::vector<Scalar>>;

inline Matrix mat_zero(const Field& f, std::size_t rows, std::size_t cols) {
    return Matrix(rows, std::vector<Scalar>(cols, Scalar::zero(f)));
}

inline Matrix mat_identity(const Field& f, std::size_t n) {
    Matrix m = mat_zero(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar::one(f);
    return m;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    if (!a.empty() && a[0].size() != k) throw std::invalid_argument("matrix shape mismatch");
    const Field& f = a.at(0).at(0).field();
    Matrix out = mat_zero(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

inline Matrix mat_add(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
    return out;
}

inline Matrix mat_scaled(const Matrix& a, const Scalar& c) {
    Matrix out = a;
    for (auto& row : out)
        for (auto& e : row) e *= c;
    return out;
}

inline bool mat_is_zero(const Matrix& a) {
    for (const auto& row : a)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

inline std::string mat_str(const Matrix& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (j) s += ",";
            s += a[i][j].str();
        }
    }
    return s + "]";
}

struct SingularMatrix : std::runtime_error {
    int rank;
    explicit SingularMatrix(int r)
        : std::runtime_error("singular matrix, rank " + std::to_string(r)), rank(r) {}
};

inline Matrix mat_inverse(const Field& f, Matrix a) {
    std::size_t N = a.size();
    Matrix inv = mat_identity(f, N);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t piv = N;
        for (std::size_t r = rank; r < N; ++r)
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == N) continue;
        std::swap(a[piv], a[rank]);
        std::swap(inv[piv], inv[rank]);
        Scalar d = a[rank][col].inverse();
        for (std::size_t c = 0; c < N; ++c) {
            a[rank][c] *= d;
            inv[rank][c] *= d;
        }
        for (std::size_t r = 0; r < N; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            Scalar m = a[r][col];
            for (std::size_t c = 0; c < N; ++c) {
                a[r][c] -= m * a[rank][c];
                inv[r][c] -= m * inv[rank][c];
            }
        }
        ++rank;
    }
    if (rank != N) throw SingularMatrix(static_cast<int>(rank));
    return inv;
}

/// Deterministic basis of {x : A x = 0}: reduced row echelon form, one basis
/// vector per free column in column order.
inline std::vector<std::vector<Scalar>> kernel_basis(const Field& f, Matrix a, std::size_t ncols) {
    std::size_t nrows = a.size();
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t piv = nrows;
        for (std::size_t r = rank; r < nrows; ++r)
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == nrows) continue;
        std::swap(a[piv], a[rank]);
        Scalar d = a[rank][col].inverse();
        for (std::size_t c = 0; c < ncols; ++c) a[rank][c] *= d;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            Scalar m = a[r][col];
            for (std::size_t c = 0; c < ncols; ++c) a[r][c] -= m * a[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(ncols, Scalar::zero(f));
        v[free] = Scalar::one(f);
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hopfeq
