#pragma once

#include <vector>

#include "rational.hpp"

namespace clusterdyn {

// Dense square/rectangular matrix over an exact field F (Rational or
// RationalFunction). F must provide arithmetic, is_zero(), and the free
// functions zero_like/one_like.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const F& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(size_t n, const F& one) {
        Matrix m(n, n, one - one);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    F& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const F& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw Error("Matrix: dimension mismatch in product");
        F zero = zero_like(data_[0]);
        Matrix r(rows_, o.cols_, zero);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const F& a = at(i, k);
                if (a.is_zero()) continue;
                for (size_t j = 0; j < o.cols_; ++j) {
                    const F& b = o.at(k, j);
                    if (!b.is_zero()) r.at(i, j) += a * b;
                }
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("Matrix: dimension mismatch");
        Matrix r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }

    Matrix scale(const F& c) const {
        Matrix r = *this;
        for (auto& e : r.data_) e *= c;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, zero_like(data_[0]));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    F det() const {
        if (rows_ != cols_) throw Error("Matrix: det of non-square matrix");
        if (rows_ == 0) throw Error("Matrix: det of empty matrix");
        Matrix m = *this;
        F zero = zero_like(data_[0]);
        F d = one_like(data_[0]);
        bool neg = false;
        for (size_t c = 0; c < cols_; ++c) {
            size_t p = c;
            while (p < rows_ && m.at(p, c).is_zero()) ++p;
            if (p == rows_) return zero;
            if (p != c) {
                for (size_t j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
                neg = !neg;
            }
            d *= m.at(c, c);
            F inv = one_like(zero) / m.at(c, c);
            for (size_t i = c + 1; i < rows_; ++i) {
                if (m.at(i, c).is_zero()) continue;
                F f = m.at(i, c) * inv;
                for (size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
            }
        }
        return neg ? (zero - d) : d;
    }

    Matrix inverse() const {
        if (rows_ != cols_) throw Error("Matrix: inverse of non-square matrix");
        size_t n = rows_;
        F zero = zero_like(data_[0]);
        F one = one_like(data_[0]);
        Matrix m = *this;
        Matrix inv = identity(n, one);
        for (size_t c = 0; c < n; ++c) {
            size_t p = c;
            while (p < n && m.at(p, c).is_zero()) ++p;
            if (p == n) throw Error("Matrix: singular");
            if (p != c)
                for (size_t j = 0; j < n; ++j) {
                    std::swap(m.at(p, j), m.at(c, j));
                    std::swap(inv.at(p, j), inv.at(c, j));
                }
            F piv = one / m.at(c, c);
            for (size_t j = 0; j < n; ++j) {
                m.at(c, j) *= piv;
                inv.at(c, j) *= piv;
            }
            for (size_t i = 0; i < n; ++i) {
                if (i == c || m.at(i, c).is_zero()) continue;
                F f = m.at(i, c);
                for (size_t j = 0; j < n; ++j) {
                    m.at(i, j) -= f * m.at(c, j);
                    inv.at(i, j) -= f * inv.at(c, j);
                }
            }
        }
        return inv;
    }

    // Determinant of the leading principal k x k submatrix.
    F leading_principal_minor(size_t k) const {
        Matrix m(k, k, zero_like(data_[0]));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) m.at(i, j) = at(i, j);
        return m.det();
    }

    Matrix submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
        Matrix m(rows.size(), cols.size(), zero_like(data_[0]));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) m.at(i, j) = at(rows[i], cols[j]);
        return m;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<F> data_;
};

using QMatrix = Matrix<Rational>;

inline QMatrix to_qmatrix(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) throw Error("to_qmatrix: empty");
    QMatrix m(rows.size(), rows[0].size(), Rational(0));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw Error("to_qmatrix: ragged rows");
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

}  // namespace clusterdyn
