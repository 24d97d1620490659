/*
   Copyright 2026 The desmic-kit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DESMIC_ARITH_MATRIX_HPP
#define DESMIC_ARITH_MATRIX_HPP

#include "desmic/arith/field.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace desmic {

/// Dense row-major matrix over a field.
template <Field K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, K(0)) {}
    Matrix(std::initializer_list<std::initializer_list<K>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged rows");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }
    static Matrix from_rows(const std::vector<std::vector<K>>& rows)
    {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::vector<K> row(std::size_t i) const { return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_}; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + a(i, k) * b(k, j);
            }
        return r;
    }
    friend std::vector<K> operator*(const Matrix& a, const std::vector<K>& v)
    {
        if (a.cols_ != v.size()) throw std::invalid_argument("Matrix: dimension mismatch");
        std::vector<K> r(a.rows_, K(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r[i] = r[i] + a(i, j) * v[j];
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref_inplace()
    {
        std::vector<std::size_t> piv;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && (*this)(p, c).is_zero()) ++p;
            if (p == rows_) continue;
            swap_rows(p, r);
            K inv = K(1) / (*this)(r, c);
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || (*this)(i, c).is_zero()) continue;
                K f = (*this)(i, c);
                for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) = (*this)(i, j) - f * (*this)(r, j);
            }
            piv.push_back(c);
            ++r;
        }
        return piv;
    }

    std::size_t rank() const
    {
        Matrix m = *this;
        return m.rref_inplace().size();
    }

    /// Basis of the right kernel {v : M v = 0}.
    std::vector<std::vector<K>> kernel() const
    {
        Matrix m = *this;
        auto piv = m.rref_inplace();
        std::vector<bool> is_piv(cols_, false);
        for (auto c : piv) is_piv[c] = true;
        std::vector<std::vector<K>> out;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_piv[f]) continue;
            std::vector<K> v(cols_, K(0));
            v[f] = K(1);
            for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
            out.push_back(std::move(v));
        }
        return out;
    }

    /// One solution of M x = b, if any.
    std::optional<std::vector<K>> solve(const std::vector<K>& b) const
    {
        if (b.size() != rows_) throw std::invalid_argument("Matrix::solve: dimension mismatch");
        Matrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        auto piv = aug.rref_inplace();
        if (!piv.empty() && piv.back() == cols_) return std::nullopt;
        std::vector<K> x(cols_, K(0));
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, cols_);
        return x;
    }

    K det() const
    {
        if (rows_ != cols_) throw std::invalid_argument("Matrix::det: non-square matrix");
        Matrix m = *this;
        K d(1);
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t p = c;
            while (p < rows_ && m(p, c).is_zero()) ++p;
            if (p == rows_) return K(0);
            if (p != c) {
                m.swap_rows(p, c);
                d = -d;
            }
            d = d * m(c, c);
            K inv = K(1) / m(c, c);
            for (std::size_t i = c + 1; i < rows_; ++i) {
                if (m(i, c).is_zero()) continue;
                K f = m(i, c) * inv;
                for (std::size_t j = c; j < cols_; ++j) m(i, j) = m(i, j) - f * m(c, j);
            }
        }
        return d;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<K> a_;
};

/// True when the vectors are equal up to a nonzero scalar.
template <Field K>
bool proportional(const std::vector<K>& a, const std::vector<K>& b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
    bool za = true, zb = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        za = za && a[i].is_zero();
        zb = zb && b[i].is_zero();
    }
    return za == zb;
}

}  // namespace desmic

#endif
