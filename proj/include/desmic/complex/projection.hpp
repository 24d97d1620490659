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

#ifndef DESMIC_COMPLEX_PROJECTION_HPP
#define DESMIC_COMPLEX_PROJECTION_HPP

// Projection of the line complex from the node [0,0,0,0,0,1] to a quartic threefold in P^4,
// and the cubic fourfold in P^6 built from the complete intersection.

#include "desmic/complex/line_complex.hpp"
#include "desmic/surface/hypersurface.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace desmic {

inline std::vector<std::string> p4_names() { return {"x1", "x2", "x3", "x4", "x5"}; }

/// Eliminates x6 from the cubic with the quadric x1 x6 = x2 x5 - x3 x4: the pseudo-remainder
/// of the cubic by the quadric in x6, a quartic in x1..x5.
template <Field K>
Form<K> projected_quartic(const CompleteIntersection<K>& plucker)
{
    if (plucker.coordinates != "plucker") throw std::invalid_argument("projected_quartic: need Plucker coordinates");
    auto vs = plucker.quadric.vars();
    auto r = pseudo_remainder(plucker.cubic.poly(), plucker.quadric.poly(), vs->index("x6"));
    if (r.degree(vs->index("x6")) != 0) throw std::logic_error("projected_quartic: x6 not eliminated");
    auto p4 = make_vars(p4_names());
    return Form<K>(r.change_ring(p4), p4_names());
}

/// x1^2 x2 x4 - x1^2 x3 x5 + x2^2 x3 x5 - x2 x3^2 x4 + x3 x4^2 x5 - x2 x4 x5^2.
template <Field K>
Form<K> quartic_threefold()
{
    auto vs = make_vars(p4_names());
    auto x = [&](int k) { return MultiPoly<K>::var(vs, k - 1); };
    auto f = x(1) * x(1) * x(2) * x(4) - x(1) * x(1) * x(3) * x(5) + x(2) * x(2) * x(3) * x(5) -
             x(2) * x(3) * x(3) * x(4) + x(3) * x(4) * x(4) * x(5) - x(2) * x(4) * x(5) * x(5);
    return Form<K>(f, p4_names());
}

/// x1^2 (x2 x4 - x3 x5) + (x2 x3 - x4 x5)(x2 x5 - x3 x4).
template <Field K>
MultiPoly<K> quartic_threefold_rewritten()
{
    auto vs = make_vars(p4_names());
    auto x = [&](int k) { return MultiPoly<K>::var(vs, k - 1); };
    return x(1) * x(1) * (x(2) * x(4) - x(3) * x(5)) + (x(2) * x(3) - x(4) * x(5)) * (x(2) * x(5) - x(3) * x(4));
}

template <Field K>
std::vector<ProjPoint<K>> quartic_threefold_nodes()
{
    const std::vector<std::vector<long long>> rows = {
        {1, 0, 0, 0, 0},  {1, 0, 0, 1, 1},  {1, 0, 0, -1, 1},  {1, 1, 0, 0, 1},   {1, -1, 0, 0, 1},   {1, 0, 0, 1, -1},
        {1, 0, 0, -1, -1}, {1, 1, 0, 0, -1}, {1, -1, 0, 0, -1}, {1, 0, 1, 1, 0},   {1, 0, 1, -1, 0},   {1, 1, 1, 0, 0},
        {1, -1, 1, 0, 0}, {1, 0, -1, 1, 0}, {1, 0, -1, -1, 0}, {1, 1, -1, 0, 0}, {1, -1, -1, 0, 0},
    };
    std::vector<ProjPoint<K>> out;
    for (const auto& r : rows) out.emplace_back(std::vector<K>(r.begin(), r.end()));
    return out;
}

/// Linear subspace of P^4 given by linear forms (coefficient vectors in x1..x5).
template <Field K>
struct LinearSubspace {
    std::string name;
    std::vector<std::vector<K>> forms;

    std::vector<std::vector<K>> basis() const { return Matrix<K>::from_rows(forms).kernel(); }
};

namespace detail {
template <Field K>
std::vector<K> lin5(std::array<int, 5> c)
{
    return std::vector<K>(c.begin(), c.end());
}
}  // namespace detail

/// The quadrangle of singular lines of X in V(x1).
template <Field K>
std::vector<LinearSubspace<K>> quartic_threefold_singular_lines()
{
    using detail::lin5;
    auto e = [](int k) {
        std::array<int, 5> c{};
        c[k - 1] = 1;
        return lin5<K>(c);
    };
    return {
        {"V(x1,x2,x4)", {e(1), e(2), e(4)}},
        {"V(x1,x3,x5)", {e(1), e(3), e(5)}},
        {"V(x1,x2-x4,x3-x5)", {e(1), lin5<K>({0, 1, 0, -1, 0}), lin5<K>({0, 0, 1, 0, -1})}},
        {"V(x1,x2+x4,x3+x5)", {e(1), lin5<K>({0, 1, 0, 1, 0}), lin5<K>({0, 0, 1, 0, 1})}},
    };
}

template <Field K>
std::vector<LinearSubspace<K>> rationality_planes()
{
    using detail::lin5;
    return {
        {"Pi1", {lin5<K>({0, 1, 0, 0, 0}), lin5<K>({0, 0, 1, 0, 0})}},
        {"Pi2", {lin5<K>({0, 0, 0, 1, 0}), lin5<K>({0, 0, 0, 0, 1})}},
        {"Pi3", {lin5<K>({1, -1, 0, 1, 0}), lin5<K>({1, 0, -1, 0, 1})}},
    };
}

/// Printed intersection points Pi1^Pi2, Pi2^Pi3, Pi3^Pi1.
template <Field K>
std::vector<ProjPoint<K>> rationality_intersections()
{
    return {ProjPoint<K>{1, 0, 0, 0, 0}, ProjPoint<K>{1, 1, 1, 0, 0}, ProjPoint<K>{1, 0, 0, -1, -1}};
}

/// Intersection of two subspaces, when it is a single point.
template <Field K>
std::optional<ProjPoint<K>> intersection_point(const LinearSubspace<K>& a, const LinearSubspace<K>& b)
{
    auto f = a.forms;
    f.insert(f.end(), b.forms.begin(), b.forms.end());
    auto ker = Matrix<K>::from_rows(f).kernel();
    if (ker.size() != 1) return std::nullopt;
    return ProjPoint<K>(ker[0]);
}

struct RationalityPlanesReport {
    std::array<bool, 3> contained{};
    std::array<bool, 3> intersections_match{};
    bool ok() const
    {
        for (int k = 0; k < 3; ++k)
            if (!contained[k] || !intersections_match[k]) return false;
        return true;
    }
};

template <Field K>
RationalityPlanesReport rationality_planes_check(const Form<K>& x)
{
    RationalityPlanesReport r;
    auto pl = rationality_planes<K>();
    auto pts = rationality_intersections<K>();
    for (int k = 0; k < 3; ++k) {
        r.contained[k] = contains_span(x, pl[k].basis());
        auto p = intersection_point(pl[k], pl[(k + 1) % 3]);
        r.intersections_match[k] = p && *p == pts[k];
    }
    return r;
}

// ---------------------------------------------------------------------------
// Cubic fourfold x0 f2 + f3 in P^6

inline std::vector<std::string> p6_names() { return {"x0", "x1", "x2", "x3", "x4", "x5", "x6"}; }

/// x0 f2(x1..x6) + f3(x1..x6) for a complete intersection V(f2, f3) in P^5.
template <Field K>
Form<K> cone_cubic(const CompleteIntersection<K>& ci)
{
    auto vs = make_vars(p6_names());
    std::map<std::string, MultiPoly<K>> im;
    for (std::size_t k = 0; k < ci.ncoords(); ++k)
        im[ci.quadric.vars()->name(ci.quadric.coords()[k])] = MultiPoly<K>::var(vs, k + 1);
    auto f = MultiPoly<K>::var(vs, 0) * ci.quadric.poly().subst(im, vs) + ci.cubic.poly().subst(im, vs);
    return Form<K>(f, p6_names());
}

/// The eight linear forms t0..t7 in x0..x6 taking the cone cubic of the Klein complex to the Segre cubic.
template <Field K>
std::vector<MultiPoly<K>> segre_t_forms()
{
    auto vs = make_vars(p6_names());
    auto x = [&](int k) { return MultiPoly<K>::var(vs, k); };
    const K i = imag_unit<K>();
    const K two(2);
    return {
        two * x(0) + x(1) - x(2) - x(3),
        two * x(0) - x(1) + x(2) - x(3),
        two * x(0) - x(1) - x(2) + x(3),
        two * x(0) + x(1) + x(2) + x(3),
        -two * x(0) - i * (x(4) + x(5) + x(6)),
        -two * x(0) + i * (x(4) + x(5) - x(6)),
        -two * x(0) + i * (x(4) - x(5) + x(6)),
        -two * x(0) + i * (-x(4) + x(5) + x(6)),
    };
}

template <Field K>
struct SegreReport {
    bool linear_sum_zero = false;
    std::optional<K> lambda;
    /// The forms are linearly independent, so the change of variables is invertible onto V(sum t).
    std::size_t rank = 0;
    bool ok() const { return linear_sum_zero && lambda && !lambda->is_zero() && rank == 7; }
};

/// sum t_k = 0 identically and sum t_k^3 = lambda * (cone cubic of the Klein complex).
template <Field K>
SegreReport<K> segre_isomorphism_check()
{
    auto t = segre_t_forms<K>();
    auto vs = t[0].vars();
    MultiPoly<K> s1 = MultiPoly<K>::constant(vs, K(0)), s3 = s1;
    Matrix<K> m(t.size(), 7);
    for (std::size_t k = 0; k < t.size(); ++k) {
        s1 = s1 + t[k];
        s3 = s3 + t[k] * t[k] * t[k];
        for (std::size_t j = 0; j < 7; ++j) {
            Exponent e(7, 0);
            e[j] = 1;
            m(k, j) = t[k].coeff(e);
        }
    }
    SegreReport<K> r;
    r.linear_sum_zero = s1.is_zero();
    r.lambda = proportionality(s3, cone_cubic(klein_complex<K>()).poly());
    r.rank = m.rank();
    return r;
}

/// Candidate nodes of the cone cubic: the vertex [1,0,...,0] and [-l_p, p] for each node p
/// of the complete intersection, where grad f3(p) = l_p grad f2(p).
template <Field K>
std::vector<ProjPoint<K>> cone_cubic_candidate_nodes(const CompleteIntersection<K>& ci, const std::vector<ProjPoint<K>>& nodes)
{
    std::vector<ProjPoint<K>> out;
    std::vector<K> v(ci.ncoords() + 1, K(0));
    v[0] = K(1);
    out.emplace_back(v);
    for (const auto& p : nodes) {
        auto x = detail::full_point(ci.quadric, p);
        auto gq = detail::gradient_at(ci.quadric, x);
        auto gc = detail::gradient_at(ci.cubic, x);
        std::size_t k = 0;
        while (k < gq.size() && gq[k].is_zero()) ++k;
        if (k == gq.size()) throw std::invalid_argument("cone_cubic_candidate_nodes: quadric singular at " + p.str());
        std::vector<K> c{-(gc[k] / gq[k])};
        c.insert(c.end(), p.coords().begin(), p.coords().end());
        out.emplace_back(std::move(c));
    }
    return out;
}

}  // namespace desmic

#endif
