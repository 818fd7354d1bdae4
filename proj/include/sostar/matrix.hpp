#pragma once

#include "sostar/gaussian.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace sostar {

// Dense matrix over Q(i), row-major, immutable in spirit: all operations
// return fresh values.  Exactness is the whole point; there is no float path.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged initializer");
            for (const auto& v : row) entries_.push_back(v);
        }
    }

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
        return m;
    }
    static ExactMatrix zero(std::size_t rows, std::size_t cols) { return ExactMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    GaussianRational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const GaussianRational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    GaussianRational& operator()(std::size_t i, std::size_t j) { return at(i, j); }
    const GaussianRational& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    bool is_zero() const {
        for (const auto& e : entries_) if (!e.is_zero()) return false;
        return true;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch in +");
        ExactMatrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) r.entries_[k] = a.entries_[k] + b.entries_[k];
        return r;
    }
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch in -");
        ExactMatrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) r.entries_[k] = a.entries_[k] - b.entries_[k];
        return r;
    }
    ExactMatrix operator-() const {
        ExactMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = -entries_[k];
        return r;
    }
    friend ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& a) {
        ExactMatrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) r.entries_[k] = s * a.entries_[k];
        return r;
    }

    ExactMatrix transpose() const {
        ExactMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    ExactMatrix conjugate() const {
        ExactMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k].conj();
        return r;
    }

    // Entry (i,j) of the result is the conjugate of entry (j,i).
    ExactMatrix conjugate_transpose() const { return transpose().conjugate(); }

    ExactMatrix block(std::size_t i0, std::size_t j0, std::size_t h, std::size_t w) const {
        if (i0 + h > rows_ || j0 + w > cols_) throw std::out_of_range("block out of range");
        ExactMatrix r(h, w);
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < w; ++j) r.at(i, j) = at(i0 + i, j0 + j);
        return r;
    }

    // [[A, B], [C, D]] from four conformable blocks.
    static ExactMatrix from_blocks(const ExactMatrix& a, const ExactMatrix& b,
                                   const ExactMatrix& c, const ExactMatrix& d) {
        if (a.rows_ != b.rows_ || c.rows_ != d.rows_ || a.cols_ != c.cols_ || b.cols_ != d.cols_)
            throw std::invalid_argument("incompatible blocks");
        ExactMatrix r(a.rows_ + c.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
        for (std::size_t i = 0; i < c.rows_; ++i)
            for (std::size_t j = 0; j < c.cols_; ++j) r.at(a.rows_ + i, j) = c.at(i, j);
        for (std::size_t i = 0; i < d.rows_; ++i)
            for (std::size_t j = 0; j < d.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = d.at(i, j);
        return r;
    }

    GaussianRational trace() const {
        if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
        GaussianRational t;
        for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> entries_;
};

inline ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in multiply");
    ExactMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const GaussianRational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

inline ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return multiply(a, b); }

inline ExactMatrix conjugate_transpose(const ExactMatrix& a) { return a.conjugate_transpose(); }

// Fraction-free (Bareiss) elimination.  Row pivoting only; the previous pivot
// divides out exactly at every step, which keeps entry growth polynomial.
// Returns the rank over Q(i).
inline std::size_t rank_exact(const ExactMatrix& a) {
    std::size_t m = a.rows(), n = a.cols();
    if (m == 0 || n == 0) return 0;
    ExactMatrix w = a;
    GaussianRational prev(1);
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && w.at(piv, col).is_zero()) ++piv;
        if (piv == m) continue;
        if (piv != row)
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(row, j), w.at(piv, j));
        const GaussianRational pivot = w.at(row, col);
        for (std::size_t i = row + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * pivot - w.at(i, col) * w.at(row, j)) / prev;
            w.at(i, col) = GaussianRational(0);
        }
        prev = pivot;
        ++rank;
        ++row;
    }
    return rank;
}

inline GaussianRational determinant(const ExactMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) return GaussianRational(1);
    ExactMatrix w = a;
    GaussianRational prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && w.at(piv, k).is_zero()) ++piv;
        if (piv == n) return GaussianRational(0);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            sign = -sign;
        }
        const GaussianRational pivot = w.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * pivot - w.at(i, k) * w.at(k, j)) / prev;
            w.at(i, k) = GaussianRational(0);
        }
        prev = pivot;
    }
    GaussianRational det = w.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

struct singular_matrix_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Exact inverse via Gauss-Jordan.  Throws singular_matrix_error when
// rank < dimension.
inline ExactMatrix invert(const ExactMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("invert of non-square matrix");
    std::size_t n = a.rows();
    ExactMatrix w = a;
    ExactMatrix inv = ExactMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && w.at(piv, col).is_zero()) ++piv;
        if (piv == n) throw singular_matrix_error("matrix is singular over Q(i)");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w.at(col, j), w.at(piv, j));
                std::swap(inv.at(col, j), inv.at(piv, j));
            }
        const GaussianRational pivinv = w.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            w.at(col, j) *= pivinv;
            inv.at(col, j) *= pivinv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w.at(i, col).is_zero()) continue;
            const GaussianRational f = w.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

inline bool is_hermitian(const ExactMatrix& a) {
    return a.is_square() && a == a.conjugate_transpose();
}

// Exact positive-definiteness via leading principal minors (Sylvester);
// requires hermitian input.
inline bool is_positive_definite(const ExactMatrix& a) {
    if (!is_hermitian(a)) return false;
    for (std::size_t k = 1; k <= a.rows(); ++k) {
        GaussianRational mk = determinant(a.block(0, 0, k, k));
        if (mk.im != 0 || mk.re <= 0) return false;
    }
    return true;
}

} // namespace sostar
