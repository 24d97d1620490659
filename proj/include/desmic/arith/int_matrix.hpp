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

#ifndef DESMIC_ARITH_INT_MATRIX_HPP
#define DESMIC_ARITH_INT_MATRIX_HPP

#include "desmic/arith/matrix.hpp"
#include "desmic/arith/rational.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace desmic {

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
            for (long v : r) a_.emplace_back(v);
        }
    }
    static IntMatrix identity(std::size_t n)
    {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static IntMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows)
    {
        IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("IntMatrix: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    mpz_class& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::vector<mpz_class> row(std::size_t i) const { return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_}; }
    std::vector<mpz_class> col(std::size_t j) const
    {
        std::vector<mpz_class> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
        IntMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }
    friend bool operator==(const IntMatrix& a, const IntMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    IntMatrix transpose() const
    {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const
    {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    Matrix<Rational> to_rational() const
    {
        Matrix<Rational> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = Rational(mpq_class((*this)(i, j)));
        return m;
    }

    /// Exact determinant (Bareiss over Z).
    mpz_class det() const
    {
        if (rows_ != cols_) throw std::invalid_argument("IntMatrix::det: non-square matrix");
        if (rows_ == 0) return 1;
        IntMatrix m = *this;
        mpz_class prev = 1;
        int sign = 1;
        const std::size_t n = rows_;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (m(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && m(p, k) == 0) ++p;
                if (p == n) return 0;
                m.swap_rows(p, k);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    mpz_class t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                    mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                }
                m(i, k) = 0;
            }
            prev = m(k, k);
        }
        return sign * m(n - 1, n - 1);
    }

    std::size_t rank() const { return to_rational().rank(); }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    /// row a += k * row b
    void add_row(std::size_t a, std::size_t b, const mpz_class& k)
    {
        if (k == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += k * (*this)(b, j);
    }
    /// col a += k * col b
    void add_col(std::size_t a, std::size_t b, const mpz_class& k)
    {
        if (k == 0) return;
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += k * (*this)(i, b);
    }
    void negate_row(std::size_t a)
    {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
    }

    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += "[";
            for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + (*this)(i, j).get_str();
            s += "]";
        }
        return s;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> a_;
};

struct SmithForm {
    IntMatrix D, U, V;  // U * M * V = D
    std::vector<mpz_class> invariant_factors;  // nonzero diagonal entries, d_1 | d_2 | ...
    std::size_t rank = 0;
};

/// Smith normal form with unimodular transforms.
inline SmithForm smith_normal_form(const IntMatrix& M)
{
    const std::size_t m = M.rows(), n = M.cols();
    IntMatrix D = M, U = IntMatrix::identity(m), V = IntMatrix::identity(n);
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D(i, j) != 0 && (pi == m || abs(D(i, j)) < abs(D(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m) break;
            D.swap_rows(t, pi);
            U.swap_rows(t, pi);
            D.swap_cols(t, pj);
            V.swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                D.add_row(i, t, -q);
                U.add_row(i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                D.add_col(j, t, -q);
                V.add_col(j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // enforce divisibility of the trailing block by the pivot
            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        D.add_row(t, i, 1);
                        U.add_row(t, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (t >= m || t >= n || D(t, t) == 0) break;
        if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }
    SmithForm sf{D, U, V, {}, 0};
    for (std::size_t k = 0; k < std::min(m, n); ++k) {
        if (D(k, k) == 0) break;
        sf.invariant_factors.push_back(D(k, k));
        ++sf.rank;
    }
    return sf;
}

/// Basis (as rows) of the Z-span of the given rows, in row Hermite normal form.
inline IntMatrix row_hnf_basis(const IntMatrix& M)
{
    IntMatrix A = M;
    const std::size_t m = A.rows(), n = A.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        for (;;) {
            std::size_t p = m;
            for (std::size_t i = r; i < m; ++i)
                if (A(i, c) != 0 && (p == m || abs(A(i, c)) < abs(A(p, c)))) p = i;
            if (p == m) break;
            A.swap_rows(r, p);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (A(i, c) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), A(i, c).get_mpz_t(), A(r, c).get_mpz_t());
                A.add_row(i, r, -q);
                if (A(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (r < m && A(r, c) != 0) {
            if (A(r, c) < 0) A.negate_row(r);
            for (std::size_t i = 0; i < r; ++i) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), A(i, c).get_mpz_t(), A(r, c).get_mpz_t());
                A.add_row(i, r, -q);
            }
            ++r;
        }
    }
    IntMatrix B(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) B(i, j) = A(i, j);
    return B;
}

/// Inertia (n_plus, n_zero, n_minus) of a symmetric rational matrix.
inline std::tuple<int, int, int> inertia_signature(const Matrix<Rational>& M)
{
    const std::size_t n = M.rows();
    if (M.cols() != n) throw std::invalid_argument("inertia_signature: non-square matrix");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(M(i, j) == M(j, i))) throw std::invalid_argument("inertia_signature: matrix is not symmetric");
    Matrix<Rational> A = M;
    int pos = 0, neg = 0;
    std::size_t k = 0;
    auto sym_swap = [&](std::size_t a, std::size_t b) {
        A.swap_rows(a, b);
        for (std::size_t i = 0; i < n; ++i) std::swap(A(i, a), A(i, b));
    };
    for (; k < n; ++k) {
        std::size_t p = n;
        for (std::size_t i = k; i < n; ++i)
            if (!A(i, i).is_zero()) { p = i; break; }
        if (p == n) {
            // all remaining diagonal entries vanish: use e_i + e_j with A_ij != 0
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!A(i, j).is_zero()) { pi = i; pj = j; break; }
            if (pi == n) break;
            for (std::size_t c = 0; c < n; ++c) A(pi, c) = A(pi, c) + A(pj, c);
            for (std::size_t r = 0; r < n; ++r) A(r, pi) = A(r, pi) + A(r, pj);
            p = pi;
        }
        sym_swap(k, p);
        Rational piv = A(k, k);
        (piv.sign() > 0 ? pos : neg)++;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (A(i, k).is_zero()) continue;
            Rational f = A(i, k) / piv;
            for (std::size_t j = k + 1; j < n; ++j) A(i, j) = A(i, j) - f * A(k, j);
        }
        for (std::size_t i = k + 1; i < n; ++i) A(i, k) = A(k, i) = Rational(0);
    }
    return {pos, static_cast<int>(n) - pos - neg, neg};
}

inline std::tuple<int, int, int> inertia_signature(const IntMatrix& M) { return inertia_signature(M.to_rational()); }

}  // namespace desmic

#endif
