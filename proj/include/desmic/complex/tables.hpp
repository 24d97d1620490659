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

#ifndef DESMIC_COMPLEX_TABLES_HPP
#define DESMIC_COMPLEX_TABLES_HPP

// Printed node and plane lists of the Humbert desmic line complex.
// Plucker order is (p12,p13,p14,p23,p24,p34) = (x1,...,x6); Klein order is (x1,x2,x3,y1,y2,y3).

#include "desmic/arith/field.hpp"
#include "desmic/geom/proj.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace desmic {

namespace detail {
// Coordinate codes: 0, 1, -1, and 2 / -2 for i / -i.
template <Field K>
K gauss_code(int c)
{
    if (c == 2 || c == -2) return c > 0 ? imag_unit<K>() : -imag_unit<K>();
    return K(static_cast<long long>(c));
}

template <Field K, std::size_t N>
std::vector<ProjPoint<K>> points_from_codes(const std::vector<std::array<int, N>>& rows)
{
    std::vector<ProjPoint<K>> out;
    for (const auto& r : rows) {
        std::vector<K> c;
        for (int v : r) c.push_back(gauss_code<K>(v));
        out.emplace_back(std::move(c));
    }
    return out;
}

template <Field K>
std::vector<K> lin(std::array<int, 6> c)
{
    std::vector<K> v;
    for (int x : c) v.push_back(K(static_cast<long long>(x)));
    return v;
}
}  // namespace detail

/// The 18 nodes coming from edges of the desmic tetrahedra, Plucker coordinates.
template <Field K>
std::vector<ProjPoint<K>> plucker_sing1()
{
    return detail::points_from_codes<K, 6>({
        {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
        {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1},
        {1, 1, 0, 0, 1, 1}, {1, 1, 0, 0, -1, -1}, {1, -1, 0, 0, 1, -1}, {1, -1, 0, 0, -1, 1},
        {1, 0, 1, 1, 0, -1}, {1, 0, 1, -1, 0, 1}, {1, 0, -1, 1, 0, 1}, {1, 0, -1, -1, 0, -1},
        {0, 1, 1, 1, 1, 0}, {0, 1, 1, -1, -1, 0}, {0, 1, -1, 1, -1, 0}, {0, 1, -1, -1, 1, 0},
    });
}

/// The 16 nodes coming from the lines of the desmic quartic, Plucker coordinates.
template <Field K>
std::vector<ProjPoint<K>> plucker_sing2()
{
    return detail::points_from_codes<K, 6>({
        {1, 1, 1, 0, 0, 0}, {1, 1, -1, 0, 0, 0}, {1, -1, 1, 0, 0, 0}, {1, -1, -1, 0, 0, 0},
        {1, 0, 0, 1, 1, 0}, {1, 0, 0, 1, -1, 0}, {1, 0, 0, -1, 1, 0}, {1, 0, 0, -1, -1, 0},
        {0, 1, 0, 1, 0, 1}, {0, 1, 0, 1, 0, -1}, {0, 1, 0, -1, 0, 1}, {0, 1, 0, -1, 0, -1},
        {0, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 1, -1}, {0, 0, 1, 0, -1, 1}, {0, 0, 1, 0, -1, -1},
    });
}

template <Field K>
std::vector<ProjPoint<K>> klein_sing1()
{
    return detail::points_from_codes<K, 6>({
        {1, 0, 0, -2, 0, 0}, {0, 1, 0, 0, -2, 0}, {0, 0, 1, 0, 0, -2},
        {0, 0, 1, 0, 0, 2}, {0, 1, 0, 0, 2, 0}, {1, 0, 0, 2, 0, 0},
        {1, 0, 0, 0, 2, 0}, {0, 1, 0, 2, 0, 0}, {0, 1, 0, -2, 0, 0}, {1, 0, 0, 0, -2, 0},
        {0, 0, 1, -2, 0, 0}, {1, 0, 0, 0, 0, -2}, {1, 0, 0, 0, 0, 2}, {0, 0, 1, 2, 0, 0},
        {0, 0, 1, 0, 2, 0}, {0, 1, 0, 0, 0, 2}, {0, 1, 0, 0, 0, -2}, {0, 0, 1, 0, -2, 0},
    });
}

/// Points [e1,e2,e3,f1,f2,f3] with e_k = +-i, f_k = +-1 and e1 e2 e3 + i f1 f2 f3 = 0,
/// up to the overall sign, in lexicographic order of the sign choices.
template <Field K>
std::vector<ProjPoint<K>> klein_sing2()
{
    const K i = imag_unit<K>();
    std::vector<ProjPoint<K>> out;
    for (int m = 0; m < 64; ++m) {
        std::vector<K> c(6);
        for (int k = 0; k < 3; ++k) c[k] = (m >> (5 - k)) & 1 ? -i : i;
        for (int k = 0; k < 3; ++k) c[3 + k] = (m >> (2 - k)) & 1 ? K(-1) : K(1);
        if (!(c[0] * c[1] * c[2] + i * c[3] * c[4] * c[5]).is_zero()) continue;
        ProjPoint<K> p(std::move(c));
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
    return out;
}

/// The twelve alpha-planes (lines through a node of the desmic quartic), Plucker forms.
template <Field K>
std::vector<PluckerForms<K>> alpha_planes_printed()
{
    using detail::lin;
    std::vector<PluckerForms<K>> out = {
        {lin<K>({1, 0, 0, 0, 0, 0}), lin<K>({0, 1, 0, 0, 0, 0}), lin<K>({0, 0, 0, 1, 0, 0})},
        {lin<K>({1, 0, 0, 0, 0, 0}), lin<K>({0, 0, 1, 0, 0, 0}), lin<K>({0, 0, 0, 0, 1, 0})},
        {lin<K>({0, 1, 0, 0, 0, 0}), lin<K>({0, 0, 1, 0, 0, 0}), lin<K>({0, 0, 0, 0, 0, 1})},
        {lin<K>({0, 0, 0, 1, 0, 0}), lin<K>({0, 0, 0, 0, 1, 0}), lin<K>({0, 0, 0, 0, 0, 1})},
    };
    // Pairs 5/6, 7/8, 9/10, 11/12: (s1 x1 + s2 x2 + s4 x4, +-x1 + s3 x3 + x5, +-x2 + t3 x3 + x6).
    const std::array<std::array<int, 4>, 4> signs = {{{1, 1, 1, -1}, {1, -1, -1, 1}, {-1, 1, -1, -1}, {-1, -1, 1, 1}}};
    for (const auto& s : signs)
        for (int pm : {1, -1})
            out.push_back({lin<K>({1, s[0], 0, s[1], 0, 0}), lin<K>({pm, 0, s[2], 0, 1, 0}), lin<K>({0, pm, s[3], 0, 0, 1})});
    return out;
}

/// The twelve beta-planes (lines in a face of the desmic tetrahedra), Plucker forms.
template <Field K>
std::vector<PluckerForms<K>> beta_planes_printed()
{
    using detail::lin;
    std::vector<PluckerForms<K>> out;
    for (int pm : {1, -1}) out.push_back({lin<K>({1, 0, 0, 0, 0, 0}), lin<K>({0, 1, 0, pm, 0, 0}), lin<K>({0, 0, 1, 0, pm, 0})});
    for (int pm : {1, -1}) out.push_back({lin<K>({0, 1, 0, 0, 0, 0}), lin<K>({1, 0, 0, pm, 0, 0}), lin<K>({0, 0, 1, 0, 0, -pm})});
    for (int pm : {1, -1}) out.push_back({lin<K>({0, 0, 1, 0, 0, 0}), lin<K>({1, 0, 0, 0, pm, 0}), lin<K>({0, 1, 0, 0, 0, pm})});
    for (int pm : {1, -1}) out.push_back({lin<K>({0, 0, 0, 1, 0, 0}), lin<K>({1, pm, 0, 0, 0, 0}), lin<K>({0, 0, 0, 0, 1, pm})});
    for (int pm : {1, -1}) out.push_back({lin<K>({0, 0, 0, 0, 1, 0}), lin<K>({1, 0, pm, 0, 0, 0}), lin<K>({0, 0, 0, 1, 0, -pm})});
    for (int pm : {1, -1}) out.push_back({lin<K>({0, 0, 0, 0, 0, 1}), lin<K>({0, 1, pm, 0, 0, 0}), lin<K>({0, 0, 0, 1, pm, 0})});
    return out;
}

/// Permutation labels of the alpha- and beta-planes, in list order.
inline std::vector<std::string> alpha_plane_labels()
{
    return {"(12)(34)", "(13)(24)", "(14)(23)", "1", "(142)", "(132)", "(123)", "(124)", "(143)", "(243)", "(234)", "(134)"};
}

inline std::vector<std::string> beta_plane_labels()
{
    return {"(1342)", "(1243)", "(1432)", "(1234)", "(1423)", "(1324)", "(12)", "(34)", "(24)", "(13)", "(23)", "(14)"};
}

/// Placement of the 16 line-nodes (1-based Plucker numbering) in a 4x4 matrix whose
/// determinant monomials are the planes.
inline std::array<std::array<int, 4>, 4> determinant_label_matrix()
{
    return {{{1, 14, 12, 7}, {15, 2, 5, 10}, {9, 8, 3, 16}, {6, 11, 13, 4}}};
}

}  // namespace desmic

#endif
