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

#ifndef DESMIC_ARITH_POLY_MATRIX_HPP
#define DESMIC_ARITH_POLY_MATRIX_HPP

#include "desmic/arith/multipoly.hpp"

#include <stdexcept>
#include <vector>

namespace desmic {

template <Field K>
using PolyMatrix = std::vector<std::vector<MultiPoly<K>>>;

namespace detail {
template <Field K>
void require_square(const PolyMatrix<K>& m, const char* who)
{
    for (const auto& r : m)
        if (r.size() != m.size()) throw std::invalid_argument(std::string(who) + ": non-square matrix");
}
}  // namespace detail

/// Determinant by fraction-free Bareiss elimination with row pivoting.
template <Field K>
MultiPoly<K> det_poly_matrix(PolyMatrix<K> m)
{
    detail::require_square(m, "det_poly_matrix");
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly<K>(1);
    MultiPoly<K> prev(1);
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return MultiPoly<K>::constant(m[0][0].vars(), K(0));
            std::swap(m[p], m[k]);
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly<K> t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = t.exact_div(prev);
                if (!q) throw std::logic_error("det_poly_matrix: Bareiss division not exact");
                m[i][j] = std::move(*q);
            }
            m[i][k] = MultiPoly<K>(0);
        }
        prev = m[k][k];
    }
    MultiPoly<K> d = m[n - 1][n - 1];
    return neg ? -d : d;
}

/// Cofactor expansion along the first row; used as an independent check.
template <Field K>
MultiPoly<K> det_laplace(const PolyMatrix<K>& m)
{
    detail::require_square(m, "det_laplace");
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly<K>(1);
    if (n == 1) return m[0][0];
    MultiPoly<K> s(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix<K> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MultiPoly<K>> r;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) r.push_back(m[i][c]);
            minor.push_back(std::move(r));
        }
        MultiPoly<K> t = m[0][j] * det_laplace(minor);
        s = (j % 2 == 0) ? s + t : s - t;
    }
    return s;
}

/// m_ij = -m_ji and zero diagonal; in characteristic 2 this is "symmetric with zero diagonal".
template <Field K>
bool is_alternating(const PolyMatrix<K>& m)
{
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) return false;
        if (!m[i][i].is_zero()) return false;
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (!(m[i][j] + m[j][i]).is_zero()) return false;
    }
    return true;
}

/// Pfaffian by expansion along the first row.
template <Field K>
MultiPoly<K> pfaffian_poly_matrix(const PolyMatrix<K>& m)
{
    detail::require_square(m, "pfaffian_poly_matrix");
    if (m.size() % 2) throw std::invalid_argument("pfaffian_poly_matrix: odd size");
    for (std::size_t i = 0; i < m.size(); ++i)
        if (!m[i][i].is_zero()) throw std::invalid_argument("pfaffian_poly_matrix: diagonal entry nonzero");
    if (!is_alternating(m)) throw std::invalid_argument("pfaffian_poly_matrix: matrix is not alternating");
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly<K>(1);
    MultiPoly<K> s(0);
    for (std::size_t j = 1; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix<K> sub;
        for (std::size_t i = 1; i < n; ++i) {
            if (i == j) continue;
            std::vector<MultiPoly<K>> r;
            for (std::size_t c = 1; c < n; ++c)
                if (c != j) r.push_back(m[i][c]);
            sub.push_back(std::move(r));
        }
        MultiPoly<K> t = m[0][j] * pfaffian_poly_matrix(sub);
        s = (j % 2 == 1) ? s + t : s - t;
    }
    return s;
}

}  // namespace desmic

#endif
