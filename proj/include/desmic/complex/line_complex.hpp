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

#ifndef DESMIC_COMPLEX_LINE_COMPLEX_HPP
#define DESMIC_COMPLEX_LINE_COMPLEX_HPP

#include "desmic/arith/field.hpp"
#include "desmic/arith/matrix.hpp"
#include "desmic/arith/multipoly.hpp"
#include "desmic/arith/poly_matrix.hpp"
#include "desmic/complex/tables.hpp"
#include "desmic/config/perm.hpp"
#include "desmic/config/s4.hpp"
#include "desmic/geom/proj.hpp"
#include "desmic/surface/hypersurface.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace desmic {

/// Quadric and cubic cutting out a threefold in P^5.
template <Field K>
struct CompleteIntersection {
    Form<K> quadric;
    Form<K> cubic;
    std::string coordinates;

    std::size_t ncoords() const { return quadric.ncoords(); }
};

inline std::vector<std::string> plucker_names() { return {"x1", "x2", "x3", "x4", "x5", "x6"}; }
inline std::vector<std::string> klein_names() { return {"x1", "x2", "x3", "y1", "y2", "y3"}; }

/// x1 x6 - x2 x5 + x3 x4 = -x1 x2 x4 + x1 x3 x5 - x2 x3 x6 + x4 x5 x6 = 0.
template <Field K>
CompleteIntersection<K> plucker_complex()
{
    auto names = plucker_names();
    auto vs = make_vars(names);
    auto x = [&](int k) { return MultiPoly<K>::var(vs, k - 1); };
    auto q = x(1) * x(6) - x(2) * x(5) + x(3) * x(4);
    auto c = -x(1) * x(2) * x(4) + x(1) * x(3) * x(5) - x(2) * x(3) * x(6) + x(4) * x(5) * x(6);
    return {Form<K>(q, names), Form<K>(c, names), "plucker"};
}

/// Sum of squares = x1 x2 x3 + coef * y1 y2 y3 = 0. The line complex has coef = i.
template <Field K>
CompleteIntersection<K> klein_complex(const K& coef)
{
    auto names = klein_names();
    auto vs = make_vars(names);
    auto v = [&](int k) { return MultiPoly<K>::var(vs, k); };
    MultiPoly<K> q = MultiPoly<K>::constant(vs, K(0));
    for (int k = 0; k < 6; ++k) q = q + v(k) * v(k);
    auto c = v(0) * v(1) * v(2) + coef * (v(3) * v(4) * v(5));
    return {Form<K>(q, names), Form<K>(c, names), "klein"};
}

template <Field K>
CompleteIntersection<K> klein_complex()
{
    return klein_complex(imag_unit<K>());
}

/// Scalar l with (Klein cubic)(T p) = l * (Plucker cubic)(p), T the Klein change of coordinates,
/// and the same for the quadrics; nullopt when either pullback is not proportional.
template <Field K>
std::optional<std::pair<K, K>> klein_pullback_scalars()
{
    auto pl = plucker_complex<K>();
    auto kl = klein_complex<K>();
    auto vs = pl.quadric.vars();
    std::vector<MultiPoly<K>> p;
    for (int k = 0; k < 6; ++k) p.push_back(MultiPoly<K>::var(vs, k));
    std::vector<std::vector<K>> cols;
    auto t = klein_matrix<K>();
    std::map<std::string, MultiPoly<K>> im;
    auto kn = klein_names();
    for (int r = 0; r < 6; ++r) {
        MultiPoly<K> s = MultiPoly<K>::constant(vs, K(0));
        for (int c = 0; c < 6; ++c) s = s + t(r, c) * p[c];
        im[kn[r]] = s;
    }
    auto lq = proportionality(kl.quadric.poly().subst(im, vs), pl.quadric.poly());
    auto lc = proportionality(kl.cubic.poly().subst(im, vs), pl.cubic.poly());
    if (!lq || !lc) return std::nullopt;
    return std::make_pair(*lq, *lc);
}

// ---------------------------------------------------------------------------
// Montesano complexes of nets of quadrics

template <Field K>
struct QuadricNet {
    std::string name;
    std::array<MultiPoly<K>, 3> quadrics;
};

inline VarSetPtr p3_ring() { return make_vars({"x", "y", "z", "w"}); }

/// The three nets through eight of the twelve nodes of the desmic quartic, and the net
/// t1(xy+zw) + t2(xz+yw) + t3(xw+yz) used for the Plucker equation.
template <Field K>
std::vector<QuadricNet<K>> desmic_nets()
{
    auto vs = p3_ring();
    auto x = MultiPoly<K>::var(vs, 0), y = MultiPoly<K>::var(vs, 1), z = MultiPoly<K>::var(vs, 2),
         w = MultiPoly<K>::var(vs, 3);
    return {
        {"N1", {(x - y) * (z + w), (x - z) * (y + w), (x - w) * (y + z)}},
        {"N2", {(x - y) * (z - w), (x - z) * (y - w), (x + w) * (y + z)}},
        {"N3", {x * x - y * y, x * x - z * z, x * x - w * w}},
        {"N", {x * y + z * w, x * z + y * w, x * w + y * z}},
    };
}

namespace detail {
template <Field K>
void require_net(const QuadricNet<K>& net)
{
    std::vector<Exponent> mons;
    for (const auto& q : net.quadrics) {
        if (q.total_degree() != 2 || q.nvars() != 4) throw std::invalid_argument("montesano: net members must be quadrics in P^3");
        for (const auto& [e, c] : q.terms()) mons.push_back(e);
    }
    std::sort(mons.begin(), mons.end());
    mons.erase(std::unique(mons.begin(), mons.end()), mons.end());
    Matrix<K> m(3, mons.size());
    for (int r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < mons.size(); ++c) m(r, c) = net.quadrics[r].coeff(mons[c]);
    if (m.rank() != 3) throw std::invalid_argument("montesano: degenerate net " + net.name);
}

// Rows q(a), q(b), q(a+b) - q(a) - q(b) of the restriction of each quadric to the line.
template <class T, class Eval>
std::vector<std::vector<T>> montesano_rows(const Eval& ev)
{
    std::vector<std::vector<T>> m(3, std::vector<T>(3));
    for (int k = 0; k < 3; ++k) {
        T qa = ev(k, 0), qb = ev(k, 1), qab = ev(k, 2);
        m[0][k] = qa;
        m[1][k] = qb;
        m[2][k] = qab - qa - qb;
    }
    return m;
}
}  // namespace detail

/// Coefficients of u^2, v^2, uv of each net member restricted to the line ua + vb.
template <Field K>
Matrix<K> montesano_matrix(const QuadricNet<K>& net, const LineP3<K>& line)
{
    detail::require_net(net);
    std::array<std::vector<K>, 3> pts{line.first().coords(), line.second().coords(), std::vector<K>(4)};
    for (int i = 0; i < 4; ++i) pts[2][i] = pts[0][i] + pts[1][i];
    auto rows = detail::montesano_rows<K>([&](int k, int j) { return net.quadrics[k].eval(pts[j]); });
    return Matrix<K>::from_rows(rows);
}

/// True iff some quadric of the net contains the line.
template <Field K>
bool montesano_condition(const QuadricNet<K>& net, const LineP3<K>& line)
{
    return montesano_matrix(net, line).det().is_zero();
}

/// Affine chart of the Grassmannian: lines through (1,0,u1,u2) and (0,1,v1,v2).
inline VarSetPtr grassmann_chart_ring() { return make_vars({"u1", "u2", "v1", "v2"}); }

template <Field K>
std::vector<MultiPoly<K>> plucker_on_chart(const VarSetPtr& ring)
{
    auto c = [&](long long v) { return MultiPoly<K>::constant(ring, K(v)); };
    auto u = [&](int k) { return MultiPoly<K>::var(ring, k); };
    std::array<std::vector<MultiPoly<K>>, 2> ab{std::vector<MultiPoly<K>>{c(1), c(0), u(0), u(1)},
                                                std::vector<MultiPoly<K>>{c(0), c(1), u(2), u(3)}};
    std::vector<MultiPoly<K>> p;
    for (auto [i, j] : plucker_pairs) p.push_back(ab[0][i] * ab[1][j] - ab[0][j] * ab[1][i]);
    return p;
}

/// Determinant of the Montesano matrix on the chart, a polynomial in u1,u2,v1,v2.
template <Field K>
MultiPoly<K> montesano_chart_cubic(const QuadricNet<K>& net)
{
    detail::require_net(net);
    auto ring = grassmann_chart_ring();
    auto c = [&](long long v) { return MultiPoly<K>::constant(ring, K(v)); };
    auto u = [&](int k) { return MultiPoly<K>::var(ring, k); };
    std::array<std::vector<MultiPoly<K>>, 3> pts{std::vector<MultiPoly<K>>{c(1), c(0), u(0), u(1)},
                                                 std::vector<MultiPoly<K>>{c(0), c(1), u(2), u(3)}, {}};
    for (int i = 0; i < 4; ++i) pts[2].push_back(pts[0][i] + pts[1][i]);
    auto rows = detail::montesano_rows<MultiPoly<K>>(
        [&](int k, int j) { return poly_subst(net.quadrics[k], pts[j]); });
    return det_poly_matrix(PolyMatrix<K>(rows));
}

/// Scalar l with (Montesano determinant) = l * (cubic of ci pulled back to the chart).
template <Field K>
std::optional<K> montesano_matches_cubic(const QuadricNet<K>& net, const CompleteIntersection<K>& plucker)
{
    auto ring = grassmann_chart_ring();
    auto pc = plucker_on_chart<K>(ring);
    return proportionality(montesano_chart_cubic(net), poly_subst(plucker.cubic.poly(), pc));
}

// ---------------------------------------------------------------------------
// Nodes

/// Result of the node test at one point of a complete intersection.
struct CiPointReport {
    std::string point;
    bool on_quadric = false;
    bool on_cubic = false;
    std::size_t jacobian_rank = 0;
    /// Rank of (Hess C - l Hess Q) on the tangent space of the quadric, when singular.
    std::optional<std::size_t> restricted_rank;
    bool node = false;
};

namespace detail {
template <Field K>
std::vector<K> full_point(const Form<K>& f, const ProjPoint<K>& p)
{
    if (f.has_parameters()) throw std::invalid_argument("complete intersection has parameters");
    std::vector<K> x(f.poly().nvars(), K(0));
    for (std::size_t k = 0; k < f.ncoords(); ++k) x[f.coords()[k]] = p[k];
    return x;
}

template <Field K>
std::vector<K> gradient_at(const Form<K>& f, const std::vector<K>& x)
{
    std::vector<K> g;
    for (const auto& d : f.gradient()) g.push_back(d.eval(x));
    return g;
}

template <Field K>
Matrix<K> hessian_at(const Form<K>& f, const std::vector<K>& x)
{
    std::size_t n = f.ncoords();
    Matrix<K> h(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        auto da = f.partial(a);
        for (std::size_t b = 0; b < n; ++b) h(a, b) = da.diff(f.coords()[b]).eval(x);
    }
    return h;
}
}  // namespace detail

/// Node test for V(Q, C): both vanish, rank(grad Q, grad C) = 1 and, with grad C = l grad Q,
/// the form Hess C - l Hess Q has rank 4 on the tangent space of the quadric.
template <Field K>
CiPointReport ci_node_check(const CompleteIntersection<K>& ci, const ProjPoint<K>& p)
{
    if (p.size() != ci.ncoords()) throw std::invalid_argument("ci_node_check: wrong number of coordinates");
    CiPointReport r;
    r.point = p.str();
    auto x = detail::full_point(ci.quadric, p);
    r.on_quadric = ci.quadric.poly().eval(x).is_zero();
    r.on_cubic = ci.cubic.poly().eval(x).is_zero();
    auto gq = detail::gradient_at(ci.quadric, x);
    auto gc = detail::gradient_at(ci.cubic, x);
    r.jacobian_rank = Matrix<K>::from_rows({gq, gc}).rank();
    if (!r.on_quadric || !r.on_cubic || r.jacobian_rank != 1) return r;
    std::size_t k = 0;
    while (gq[k].is_zero()) ++k;  // the quadric is smooth, so grad Q != 0
    K lambda = gc[k] / gq[k];
    Matrix<K> h = detail::hessian_at(ci.cubic, x);
    Matrix<K> hq = detail::hessian_at(ci.quadric, x);
    std::size_t n = ci.ncoords();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) h(a, b) = h(a, b) - lambda * hq(a, b);
    auto tangent = Matrix<K>::from_rows({gq}).kernel();
    Matrix<K> t(n, tangent.size());
    for (std::size_t j = 0; j < tangent.size(); ++j)
        for (std::size_t a = 0; a < n; ++a) t(a, j) = tangent[j][a];
    r.restricted_rank = (t.transpose() * h * t).rank();
    r.node = *r.restricted_rank == n - 2;
    return r;
}

template <Field K>
struct NodeInventory {
    std::vector<ProjPoint<K>> sing1, sing2;
    std::vector<CiPointReport> reports1, reports2;

    bool all_nodes() const
    {
        auto ok = [](const auto& v) { return std::all_of(v.begin(), v.end(), [](const auto& r) { return r.node; }); };
        return ok(reports1) && ok(reports2) && sing1.size() == 18 && sing2.size() == 16;
    }
    std::vector<std::string> failures() const
    {
        std::vector<std::string> out;
        for (const auto* v : {&reports1, &reports2})
            for (const auto& r : *v)
                if (!r.node) out.push_back(r.point);
        return out;
    }
};

template <Field K>
NodeInventory<K> verify_node_inventory(const CompleteIntersection<K>& ci, std::vector<ProjPoint<K>> sing1,
                                       std::vector<ProjPoint<K>> sing2)
{
    NodeInventory<K> inv{std::move(sing1), std::move(sing2), {}, {}};
    for (const auto& p : inv.sing1) inv.reports1.push_back(ci_node_check(ci, p));
    for (const auto& p : inv.sing2) inv.reports2.push_back(ci_node_check(ci, p));
    return inv;
}

/// Inventory of the printed nodes in the coordinates of ci.
template <Field K>
NodeInventory<K> verify_node_inventory(const CompleteIntersection<K>& ci)
{
    if (ci.coordinates == "plucker") return verify_node_inventory(ci, plucker_sing1<K>(), plucker_sing2<K>());
    if (ci.coordinates == "klein") return verify_node_inventory(ci, klein_sing1<K>(), klein_sing2<K>());
    throw std::invalid_argument("verify_node_inventory: unknown coordinates " + ci.coordinates);
}

/// Position in 'to' of the Klein image of each point of 'from', or -1.
template <Field K>
std::vector<int> klein_correspondence(const std::vector<ProjPoint<K>>& from, const std::vector<ProjPoint<K>>& to)
{
    std::vector<int> out;
    for (const auto& p : from) {
        ProjPoint<K> k(klein_from_plucker(p.coords()));
        auto it = std::find(to.begin(), to.end(), k);
        out.push_back(it == to.end() ? -1 : static_cast<int>(it - to.begin()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Planes

template <Field K>
struct ComplexPlane {
    std::string name;
    PluckerForms<K> forms;
    std::string label;

    std::vector<std::vector<K>> basis() const
    {
        auto b = Matrix<K>::from_rows(forms).kernel();
        if (b.size() != 3) throw std::invalid_argument("ComplexPlane: forms do not cut out a plane");
        return b;
    }
    bool contains(const ProjPoint<K>& p) const { return forms_vanish(forms, p.coords()); }
};

template <Field K>
bool plane_in_complex(const CompleteIntersection<K>& ci, const ComplexPlane<K>& pl)
{
    auto b = pl.basis();
    return contains_span(ci.quadric, b) && contains_span(ci.cubic, b);
}

/// The 24 printed planes in Plucker coordinates, alpha-planes first.
template <Field K>
std::vector<ComplexPlane<K>> plucker_planes()
{
    std::vector<ComplexPlane<K>> out;
    auto al = alpha_planes_printed<K>();
    auto be = beta_planes_printed<K>();
    auto la = alpha_plane_labels(), lb = beta_plane_labels();
    for (std::size_t k = 0; k < al.size(); ++k) out.push_back({"alpha" + std::to_string(k + 1), al[k], la[k]});
    for (std::size_t k = 0; k < be.size(); ++k) out.push_back({"beta" + std::to_string(k + 1), be[k], lb[k]});
    return out;
}

/// Sign vector (e1,e2,e3) attached to an element of the Klein four-group {1, a, b, c}.
inline std::vector<std::pair<std::string, std::array<int, 3>>> klein_four_signs()
{
    return {{"1", {1, 1, 1}}, {"(14)(23)", {1, -1, -1}}, {"(13)(24)", {-1, 1, -1}}, {"(12)(34)", {-1, -1, 1}}};
}

/// Plane V(x_j - e_j i y_s(j)) with label s*v, s in S3 (fixing 4) and v in the Klein four-group.
template <Field K>
ComplexPlane<K> klein_plane(const Perm& s3, const std::array<int, 3>& eps, const std::string& v)
{
    const K i = imag_unit<K>();
    PluckerForms<K> forms;
    for (int j = 0; j < 3; ++j) {
        std::vector<K> f(6, K(0));
        f[j] = K(1);
        f[3 + s3(j)] = -K(static_cast<long long>(eps[j])) * i;
        forms.push_back(std::move(f));
    }
    Perm s4(std::vector<int>{s3(0), s3(1), s3(2), 3});
    Perm g = s4 * Perm::parse(v, 4);
    return {"klein" + g.str(), forms, g.str()};
}

/// The 24 planes in Klein coordinates, one per element of S4.
template <Field K>
std::vector<ComplexPlane<K>> klein_planes()
{
    std::vector<ComplexPlane<K>> out;
    for (const auto& s : all_perms(3))
        for (const auto& [v, eps] : klein_four_signs()) out.push_back(klein_plane<K>(s, eps, v));
    return out;
}

/// Klein planes in the order of the printed alpha and beta label lists.
template <Field K>
std::vector<ComplexPlane<K>> klein_planes_by_label()
{
    auto all = klein_planes<K>();
    std::vector<ComplexPlane<K>> out;
    auto labels = alpha_plane_labels();
    for (const auto& l : beta_plane_labels()) labels.push_back(l);
    for (const auto& l : labels) {
        auto want = Perm::parse(l, 4).str();
        auto it = std::find_if(all.begin(), all.end(), [&](const auto& p) { return p.label == want; });
        if (it == all.end()) throw std::logic_error("klein_planes_by_label: missing label " + l);
        out.push_back(*it);
    }
    return out;
}

/// Plucker forms of the image of a plane under the Klein change of coordinates.
template <Field K>
std::vector<std::vector<K>> klein_image_basis(const ComplexPlane<K>& pl)
{
    std::vector<std::vector<K>> out;
    for (const auto& b : pl.basis()) out.push_back(klein_from_plucker(b));
    return out;
}

template <Field K>
bool plane_contains_span(const ComplexPlane<K>& pl, const std::vector<std::vector<K>>& basis)
{
    return std::all_of(basis.begin(), basis.end(), [&](const auto& b) { return forms_vanish(pl.forms, b); });
}

template <Field K>
struct PlaneInventory {
    std::vector<bool> contained;
    /// Node indices in each plane, for the two node families.
    std::vector<std::vector<int>> in_plane1, in_plane2;
    /// Plane indices through each node.
    std::vector<std::vector<int>> through1, through2;

    bool all_contained() const { return std::all_of(contained.begin(), contained.end(), [](bool b) { return b; }); }

    /// Type (24_{3+4}, 18_4 + 16_6).
    bool counts_match() const
    {
        if (contained.size() != 24 || through1.size() != 18 || through2.size() != 16) return false;
        for (std::size_t k = 0; k < contained.size(); ++k)
            if (in_plane1[k].size() != 3 || in_plane2[k].size() != 4) return false;
        for (const auto& t : through1)
            if (t.size() != 4) return false;
        for (const auto& t : through2)
            if (t.size() != 6) return false;
        return true;
    }
};

template <Field K>
PlaneInventory<K> verify_plane_inventory(const CompleteIntersection<K>& ci, const std::vector<ComplexPlane<K>>& planes,
                                         const std::vector<ProjPoint<K>>& sing1, const std::vector<ProjPoint<K>>& sing2)
{
    PlaneInventory<K> inv;
    inv.through1.assign(sing1.size(), {});
    inv.through2.assign(sing2.size(), {});
    for (std::size_t k = 0; k < planes.size(); ++k) {
        inv.contained.push_back(plane_in_complex(ci, planes[k]));
        inv.in_plane1.emplace_back();
        inv.in_plane2.emplace_back();
        for (std::size_t j = 0; j < sing1.size(); ++j)
            if (planes[k].contains(sing1[j])) {
                inv.in_plane1.back().push_back(static_cast<int>(j));
                inv.through1[j].push_back(static_cast<int>(k));
            }
        for (std::size_t j = 0; j < sing2.size(); ++j)
            if (planes[k].contains(sing2[j])) {
                inv.in_plane2.back().push_back(static_cast<int>(j));
                inv.through2[j].push_back(static_cast<int>(k));
            }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Permutation labels

/// Labels of the planes through each point.
template <Field K>
std::vector<std::set<Perm>> labels_through(const std::vector<ComplexPlane<K>>& planes,
                                           const std::vector<std::vector<int>>& through)
{
    std::vector<std::set<Perm>> out;
    for (const auto& t : through) {
        std::set<Perm> s;
        for (int k : t) s.insert(Perm::parse(planes[k].label, 4));
        out.push_back(std::move(s));
    }
    return out;
}

/// Index of the subgroup H_i with s = H_i g (right_side false: s = g H_i), or -1.
inline int coset_of(const std::set<Perm>& s, bool left_coset)
{
    if (s.size() != 4) return -1;
    auto hs = coset_subgroups();
    const Perm& g = *s.begin();
    for (int i = 0; i < 3; ++i) {
        std::set<Perm> c;
        for (const auto& h : hs[i]) c.insert(left_coset ? g * h : h * g);
        if (c == s) return i;
    }
    return -1;
}

/// Every point's label set is a coset of some H_i and all 18 cosets occur once.
inline bool labels_form_cosets(const std::vector<std::set<Perm>>& sets, bool left_coset)
{
    std::set<std::set<Perm>> seen;
    for (const auto& s : sets) {
        if (coset_of(s, left_coset) < 0) return false;
        seen.insert(s);
    }
    return seen.size() == 18 && sets.size() == 18;
}

/// The line-nodes of each plane (indices in the Plucker numbering) sit in the cells
/// (r, g(r)) of the printed 4x4 matrix for one permutation g, distinct for distinct planes.
inline bool determinant_matrix_consistent(const std::vector<std::vector<int>>& in_plane2)
{
    auto m = determinant_label_matrix();
    std::array<std::pair<int, int>, 16> cell{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) cell[m[r][c] - 1] = {r, c};
    std::set<std::vector<int>> seen;
    for (const auto& pts : in_plane2) {
        if (pts.size() != 4) return false;
        std::vector<int> g(4, -1);
        for (int n : pts) {
            auto [r, c] = cell.at(n);
            if (g[r] >= 0) return false;
            g[r] = c;
        }
        if (std::set<int>(g.begin(), g.end()).size() != 4) return false;
        seen.insert(g);
    }
    return seen.size() == in_plane2.size() && in_plane2.size() == 24;
}

}  // namespace desmic

#endif
