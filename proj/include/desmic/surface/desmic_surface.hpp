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

#ifndef DESMIC_SURFACE_DESMIC_SURFACE_HPP
#define DESMIC_SURFACE_DESMIC_SURFACE_HPP

#include "desmic/surface/hypersurface.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace desmic {

namespace detail {

template <Field K>
MultiPoly<K> desmic_expression(const MultiPoly<K>& a, const MultiPoly<K>& b, const MultiPoly<K>& c,
                               const VarSetPtr& vs)
{
    using P = MultiPoly<K>;
    P x = P::var(vs, "x"), y = P::var(vs, "y"), z = P::var(vs, "z"), w = P::var(vs, "w");
    P x2 = x * x, y2 = y * y, z2 = z * z, w2 = w * w;
    return a * (x2 - y2) * (z2 - w2) + b * (x2 - w2) * (y2 - z2) + c * (x2 - z2) * (w2 - y2);
}

}  // namespace detail

/// Member of the desmic pencil with symbolic a, b and c = -a - b, in the ring {a, b, x, y, z, w}.
template <Field K>
Form<K> desmic_pencil()
{
    auto vs = make_vars({"a", "b", "x", "y", "z", "w"});
    using P = MultiPoly<K>;
    P a = P::var(vs, "a"), b = P::var(vs, "b");
    return Form<K>(detail::desmic_expression<K>(a, b, -a - b, vs), {"x", "y", "z", "w"});
}

/// The member with the given coefficients; a + b + c must vanish.
template <Field K>
Form<K> desmic_quartic(const K& a, const K& b, const K& c)
{
    if (!(a + b + c).is_zero()) throw std::invalid_argument("desmic_quartic: a + b + c must be zero");
    auto vs = make_vars({"x", "y", "z", "w"});
    using P = MultiPoly<K>;
    return Form<K>(detail::desmic_expression<K>(P::constant(vs, a), P::constant(vs, b), P::constant(vs, c), vs),
                   {"x", "y", "z", "w"});
}

/// The twelve singular points of every smooth-enough member of the pencil.
template <Field K>
std::vector<ProjPoint<K>> desmic_nodes()
{
    return {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0},  {1, 0, 0, 0},  {1, 1, 1, 1},   {1, 1, -1, -1},
            {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}};
}

/// The twelve vertices [0,0,1,+-1], ..., [1,+-1,0,0] of the third desmic tetrahedron system.
template <Field K>
std::vector<ProjPoint<K>> desmic_vertices()
{
    std::vector<ProjPoint<K>> out;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int s : {1, -1}) {
                std::vector<K> c(4, K(0));
                c[i] = K(1);
                c[j] = K(s);
                out.emplace_back(c);
            }
    return out;
}

template <Field K>
struct NamedLine {
    std::string name;
    ProjPlane<K> h1, h2;
    LineP3<K> line;
};

/// The sixteen base lines V(x+-y, x+-w), V(x+-y, y+-z), V(z+-w, x+-w), V(z+-w, y+-z).
template <Field K>
std::vector<NamedLine<K>> desmic_lines()
{
    auto sg = [](int s) { return s > 0 ? std::string("+") : std::string("-"); };
    std::vector<NamedLine<K>> out;
    auto add = [&](const std::string& n, ProjPlane<K> h1, ProjPlane<K> h2) {
        out.push_back({n, h1, h2, LineP3<K>::from_planes(h1, h2)});
    };
    for (int s : {1, -1})
        for (int t : {1, -1}) {
            add("V(x" + sg(s) + "y,x" + sg(t) + "w)", {1, s, 0, 0}, {1, 0, 0, t});
            add("V(x" + sg(s) + "y,y" + sg(t) + "z)", {1, s, 0, 0}, {0, 1, t, 0});
            add("V(z" + sg(s) + "w,x" + sg(t) + "w)", {0, 0, 1, s}, {1, 0, 0, t});
            add("V(z" + sg(s) + "w,y" + sg(t) + "z)", {0, 0, 1, s}, {0, 1, t, 0});
        }
    return out;
}

/// For each line, the indices of the points lying on it.
template <Field K>
std::vector<std::vector<int>> line_point_incidence(const std::vector<LineP3<K>>& lines,
                                                   const std::vector<ProjPoint<K>>& pts)
{
    std::vector<std::vector<int>> out;
    for (const auto& l : lines) {
        std::vector<int> on;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (l.contains(pts[i])) on.push_back(static_cast<int>(i));
        out.push_back(on);
    }
    return out;
}

/// Tangency of the planes u*h1 + v*h2 through a line V(h1, h2) on a parametric surface.
template <Field K>
struct TangencyResult {
    VarSetPtr ring;             // parameters of the surface, then u, v, s, m1, m2
    MultiPoly<K> alpha, beta;   // the condition alpha*u + beta*v = 0
    bool rank_one = false;      // every coefficient is a multiple of that one condition
    MultiPoly<K> restriction;   // surface restricted to the tangent plane, in s, m1, m2
    MultiPoly<K> conic;         // restriction / s^2
    MultiPoly<K> line_discriminant;  // of the conic restricted to s = 0
    MultiPoly<K> condition() const
    {
        return alpha * MultiPoly<K>::var(ring, "u") + beta * MultiPoly<K>::var(ring, "v");
    }
};

/// Plane coordinates put the line on the axis s = 0: with h1, h2, m1, m2 a basis of
/// linear forms, points of u h1 + v h2 = 0 have (h1, h2, m1, m2) = (v s, -u s, m1, m2).
template <Field K>
TangencyResult<K> residual_conic_tangency(const Form<K>& f, const ProjPlane<K>& h1, const ProjPlane<K>& h2)
{
    if (f.ncoords() != 4) throw std::invalid_argument("residual_conic_tangency: needs a surface in P^3");
    auto line = LineP3<K>::from_planes(h1, h2);
    if (!contains_line(f, line)) throw std::invalid_argument("residual_conic_tangency: line is not on the surface");

    std::vector<std::vector<K>> rows{h1.coeffs(), h2.coeffs()};
    for (int i = 0; i < 4 && rows.size() < 4; ++i) {
        std::vector<K> e(4, K(0));
        e[i] = K(1);
        auto r = rows;
        r.push_back(e);
        if (Matrix<K>::from_rows(r).rank() == r.size()) rows = r;
    }
    Matrix<K> L = Matrix<K>::from_rows(rows);
    // columns of L^-1 by solving L x = e_k
    std::vector<std::vector<K>> inv_cols;
    for (int k = 0; k < 4; ++k) {
        std::vector<K> e(4, K(0));
        e[k] = K(1);
        inv_cols.push_back(*L.solve(e));
    }

    TangencyResult<K> res;
    res.ring = parameter_ring(f, {"u", "v", "s", "m1", "m2"});
    using P = MultiPoly<K>;
    P u = P::var(res.ring, "u"), v = P::var(res.ring, "v"), s = P::var(res.ring, "s");
    std::vector<P> y{v * s, -u * s, P::var(res.ring, "m1"), P::var(res.ring, "m2")};
    std::map<std::string, P> im;
    for (std::size_t i = 0; i < 4; ++i) {
        P xi = P::constant(res.ring, K(0));
        for (std::size_t k = 0; k < 4; ++k) xi += inv_cols[k][i] * y[k];
        im[f.vars()->name(f.coords()[i])] = xi;
    }
    P r = f.poly().subst(im, res.ring);
    std::size_t si = res.ring->index("s"), ui = res.ring->index("u"), vi = res.ring->index("v");
    auto by_s = r.coeffs_in(si);
    if (by_s.empty() || !by_s[0].is_zero()) throw std::logic_error("residual_conic_tangency: restriction not divisible by s");
    P r1 = by_s.size() > 1 ? by_s[1] : P::constant(res.ring, K(0));

    // r1 = sum over monomials m in (m1, m2) of (alpha_m u + beta_m v) m
    std::map<Exponent, std::pair<P, P>> cols;
    for (const auto& [e, c] : r1.terms()) {
        Exponent mono(e.size(), 0), par = e;
        mono[res.ring->index("m1")] = e[res.ring->index("m1")];
        mono[res.ring->index("m2")] = e[res.ring->index("m2")];
        par[res.ring->index("m1")] = par[res.ring->index("m2")] = 0;
        auto it = cols.try_emplace(mono, P::constant(res.ring, K(0)), P::constant(res.ring, K(0))).first;
        if (e[ui] == 1 && e[vi] == 0) {
            par[ui] = 0;
            it->second.first += P::monomial(res.ring, par, c);
        } else if (e[vi] == 1 && e[ui] == 0) {
            par[vi] = 0;
            it->second.second += P::monomial(res.ring, par, c);
        } else {
            throw std::logic_error("residual_conic_tangency: coefficient not linear in (u, v)");
        }
    }
    res.alpha = res.beta = P::constant(res.ring, K(0));
    for (const auto& [m, ab] : cols)
        if (!ab.first.is_zero() || !ab.second.is_zero()) {
            res.alpha = ab.first;
            res.beta = ab.second;
            break;
        }
    res.rank_one = true;
    for (const auto& [m, ab] : cols) res.rank_one = res.rank_one && (ab.first * res.beta - ab.second * res.alpha).is_zero();

    // restrict to the tangent plane (u, v) = (beta, -alpha) and divide by s^2
    res.restriction = r.subst({{"u", res.beta}, {"v", -res.alpha}}, res.ring);
    Exponent s2(res.ring->size(), 0);
    s2[si] = 2;
    auto q = res.restriction.exact_div(P::monomial(res.ring, s2, K(1)));
    if (!q) throw std::logic_error("residual_conic_tangency: tangent plane section not divisible by s^2");
    res.conic = *q;
    auto on_line = res.conic.coeffs_in(si);
    P c0 = on_line.empty() ? P::constant(res.ring, K(0)) : on_line[0];
    Exponent e11(res.ring->size(), 0), e20 = e11, e02 = e11;
    e20[res.ring->index("m1")] = 2;
    e02[res.ring->index("m2")] = 2;
    e11[res.ring->index("m1")] = e11[res.ring->index("m2")] = 1;
    auto coeff_of = [&](const Exponent& mono) {
        P out = P::constant(res.ring, K(0));
        for (const auto& [e, c] : c0.terms()) {
            if (e[res.ring->index("m1")] != mono[res.ring->index("m1")] ||
                e[res.ring->index("m2")] != mono[res.ring->index("m2")])
                continue;
            Exponent par = e;
            par[res.ring->index("m1")] = par[res.ring->index("m2")] = 0;
            out += P::monomial(res.ring, par, c);
        }
        return out;
    };
    P A = coeff_of(e20), B = coeff_of(e11), C = coeff_of(e02);
    res.line_discriminant = B * B - K(4) * A * C;
    return res;
}

/// Rank of the evaluation matrix of plane quartic monomials at the projections of the
/// 24 nodes and vertices from a center; rank < 15 means a plane quartic passes through all.
template <Field K>
std::size_t projected_points_quartic_rank(const std::vector<ProjPoint<K>>& pts, const ProjPoint<K>& center)
{
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i; j < pts.size(); ++j) {
            auto m = Matrix<K>::from_rows({center.coords(), pts[i].coords(), pts[j].coords()});
            if (m.rank() < (i == j ? 2u : 3u))
                throw std::invalid_argument("projected_points_quartic_rank: center lies on a connecting line");
        }
    auto forms = Matrix<K>::from_rows({center.coords()}).kernel();
    auto monos = monomials_of_degree(3, 4);
    Matrix<K> ev(pts.size(), monos.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<K> img(3, K(0));
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t k = 0; k < 4; ++k) img[r] += forms[r][k] * pts[i][k];
        for (std::size_t j = 0; j < monos.size(); ++j) {
            K v(1);
            for (std::size_t r = 0; r < 3; ++r) v = v * field_pow(img[r], monos[j][r]);
            ev(i, j) = v;
        }
    }
    return ev.rank();
}

template <Field K>
std::size_t projected_24_points_quartic_rank(const ProjPoint<K>& center)
{
    auto pts = desmic_nodes<K>();
    auto v = desmic_vertices<K>();
    pts.insert(pts.end(), v.begin(), v.end());
    return projected_points_quartic_rank(pts, center);
}

}  // namespace desmic

#endif
