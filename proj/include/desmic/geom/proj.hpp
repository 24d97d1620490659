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

#ifndef DESMIC_GEOM_PROJ_HPP
#define DESMIC_GEOM_PROJ_HPP

#include "desmic/arith/matrix.hpp"
#include "desmic/arith/multipoly.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace desmic {

/// Point of P^n given by n+1 homogeneous coordinates, compared up to scale.
template <Field K>
class ProjPoint {
public:
    ProjPoint() = default;
    ProjPoint(std::vector<K> c) : c_(std::move(c))  // NOLINT(google-explicit-constructor)
    {
        bool all_zero = true;
        for (const auto& x : c_) all_zero = all_zero && x.is_zero();
        if (c_.empty() || all_zero) throw std::invalid_argument("ProjPoint: all coordinates are zero");
    }
    ProjPoint(std::initializer_list<long long> c)
        : ProjPoint(std::vector<K>(c.begin(), c.end()))
    {
    }

    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<K>& coords() const noexcept { return c_; }
    const K& operator[](std::size_t i) const { return c_.at(i); }

    /// Representative whose first nonzero coordinate is 1.
    ProjPoint normalized() const
    {
        std::size_t k = 0;
        while (c_[k].is_zero()) ++k;
        K inv = K(1) / c_[k];
        std::vector<K> d(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * inv;
        return ProjPoint(std::move(d));
    }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return proportional(a.c_, b.c_); }

    std::string str() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + c_[i].str();
        return s + "]";
    }

private:
    std::vector<K> c_;
};

/// Plane V(a x + b y + c z + d w) in P^3 (or hyperplane in P^n).
template <Field K>
class ProjPlane {
public:
    ProjPlane() = default;
    ProjPlane(std::vector<K> c) : p_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
    ProjPlane(std::initializer_list<long long> c) : p_(std::vector<K>(c.begin(), c.end())) {}

    const std::vector<K>& coeffs() const noexcept { return p_.coords(); }
    const K& operator[](std::size_t i) const { return p_[i]; }
    std::size_t size() const noexcept { return p_.size(); }

    K apply(const ProjPoint<K>& x) const
    {
        if (x.size() != size()) throw std::invalid_argument("ProjPlane: dimension mismatch");
        K s(0);
        for (std::size_t i = 0; i < size(); ++i) s = s + p_[i] * x[i];
        return s;
    }
    bool contains(const ProjPoint<K>& x) const { return apply(x).is_zero(); }

    /// The linear form as a polynomial in the given ring.
    MultiPoly<K> form(const VarSetPtr& vs) const
    {
        MultiPoly<K> f = MultiPoly<K>::constant(vs, K(0));
        for (std::size_t i = 0; i < size(); ++i) f += p_[i] * MultiPoly<K>::var(vs, i);
        return f;
    }

    friend bool operator==(const ProjPlane& a, const ProjPlane& b) { return a.p_ == b.p_; }
    std::string str() const { return "V" + p_.str(); }

private:
    ProjPoint<K> p_;
};

/// Plucker coordinates are ordered (p12, p13, p14, p23, p24, p34) with p_ij = a_i b_j - a_j b_i.
inline constexpr std::array<std::array<int, 2>, 6> plucker_pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Index of p_ij (0-based i < j) in the Plucker 6-tuple.
inline int plucker_index(int i, int j)
{
    for (int k = 0; k < 6; ++k)
        if (plucker_pairs[k][0] == i && plucker_pairs[k][1] == j) return k;
    throw std::invalid_argument("plucker_index: need 0 <= i < j <= 3");
}

template <Field K>
K plucker_relation(const std::vector<K>& p)
{
    return p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
}

/// Line in P^3 with two spanning points and cached Plucker coordinates.
template <Field K>
class LineP3 {
public:
    LineP3(const ProjPoint<K>& a, const ProjPoint<K>& b) : a_(a), b_(b)
    {
        if (a.size() != 4 || b.size() != 4) throw std::invalid_argument("LineP3: points must lie in P^3");
        p_.resize(6);
        bool zero = true;
        for (int k = 0; k < 6; ++k) {
            auto [i, j] = plucker_pairs[k];
            p_[k] = a[i] * b[j] - a[j] * b[i];
            zero = zero && p_[k].is_zero();
        }
        if (zero) throw std::invalid_argument("LineP3: spanning points are dependent");
    }

    /// Intersection of two distinct planes.
    static LineP3 from_planes(const ProjPlane<K>& u, const ProjPlane<K>& v)
    {
        Matrix<K> m = Matrix<K>::from_rows({u.coeffs(), v.coeffs()});
        auto ker = m.kernel();
        if (ker.size() != 2) throw std::invalid_argument("LineP3::from_planes: planes coincide");
        return LineP3(ProjPoint<K>(ker[0]), ProjPoint<K>(ker[1]));
    }

    const ProjPoint<K>& first() const noexcept { return a_; }
    const ProjPoint<K>& second() const noexcept { return b_; }
    const std::vector<K>& plucker() const noexcept { return p_; }

    /// Point s*a + t*b.
    ProjPoint<K> point(const K& s, const K& t) const
    {
        std::vector<K> c(4);
        for (int i = 0; i < 4; ++i) c[i] = s * a_[i] + t * b_[i];
        return ProjPoint<K>(std::move(c));
    }

    bool contains(const ProjPoint<K>& x) const
    {
        Matrix<K> m = Matrix<K>::from_rows({a_.coords(), b_.coords(), x.coords()});
        return m.rank() == 2;
    }
    bool in_plane(const ProjPlane<K>& h) const { return h.contains(a_) && h.contains(b_); }

    friend bool operator==(const LineP3& l, const LineP3& m) { return proportional(l.p_, m.p_); }

private:
    ProjPoint<K> a_, b_;
    std::vector<K> p_;
};

template <Field K>
LineP3<K> plucker_from_points(const ProjPoint<K>& p, const ProjPoint<K>& q)
{
    return LineP3<K>(p, q);
}

/// Klein coordinates (x1,x2,x3,y1,y2,y3) of a Plucker 6-tuple.
template <Field K>
std::vector<K> klein_from_plucker(const std::vector<K>& p)
{
    if (p.size() != 6) throw std::invalid_argument("klein_from_plucker: need 6 coordinates");
    K i = imag_unit<K>();
    // p = (p12, p13, p14, p23, p24, p34)
    return {p[0] + p[5], -p[1] + p[4], p[2] + p[3], i * (p[5] - p[0]), i * (p[4] + p[1]), i * (p[3] - p[2])};
}

template <Field K>
std::vector<K> klein_from_plucker(const LineP3<K>& l)
{
    return klein_from_plucker(l.plucker());
}

/// 6x6 matrix of the Plucker-to-Klein change of coordinates.
template <Field K>
Matrix<K> klein_matrix()
{
    Matrix<K> m(6, 6);
    for (int k = 0; k < 6; ++k) {
        std::vector<K> e(6, K(0));
        e[k] = K(1);
        auto col = klein_from_plucker(e);
        for (int r = 0; r < 6; ++r) m(r, k) = col[r];
    }
    return m;
}

template <Field K>
K klein_quadric(const std::vector<K>& x)
{
    K s(0);
    for (const auto& c : x) s = s + c * c;
    return s;
}

/// Linear map x -> M x applied to a point.
template <Field K>
ProjPoint<K> apply(const Matrix<K>& m, const ProjPoint<K>& x)
{
    return ProjPoint<K>(m * x.coords());
}

namespace detail {
template <Field K>
void require_odd_characteristic(const char* who)
{
    if (K::characteristic == 2) throw std::domain_error(std::string(who) + ": characteristic 2");
}
}  // namespace detail

/// Involution fixing the plane pointwise and the center: (h.c) I - 2 c h^T.
template <Field K>
Matrix<K> harmonic_homology(const ProjPlane<K>& axis, const ProjPoint<K>& center)
{
    detail::require_odd_characteristic<K>("harmonic_homology");
    K hc = axis.apply(center);
    if (hc.is_zero()) throw std::invalid_argument("harmonic_homology: center lies on the axis");
    const std::size_t n = center.size();
    Matrix<K> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? hc : K(0)) - K(2) * center[i] * axis[j];
    return m;
}

/// An edge of the coordinate tetrahedron V(xyzw), named by the two coordinates vanishing on it.
using CoordEdge = std::array<int, 2>;

/// Sign-flip involution fixing two opposite coordinate edges pointwise.
template <Field K>
Matrix<K> edge_involution(CoordEdge e1, CoordEdge e2)
{
    detail::require_odd_characteristic<K>("edge_involution");
    std::array<int, 4> seen{0, 0, 0, 0};
    for (int i : {e1[0], e1[1], e2[0], e2[1]}) {
        if (i < 0 || i > 3) throw std::invalid_argument("edge_involution: coordinate index out of range");
        ++seen[i];
    }
    for (int s : seen)
        if (s != 1 || e1[0] == e1[1]) throw std::invalid_argument("edge_involution: edges are not opposite");
    Matrix<K> m = Matrix<K>::identity(4);
    m(e1[0], e1[0]) = K(-1);
    m(e1[1], e1[1]) = K(-1);
    return m;
}

/// Plane through three points of P^3.
template <Field K>
ProjPlane<K> plane_through(const ProjPoint<K>& a, const ProjPoint<K>& b, const ProjPoint<K>& c)
{
    auto ker = Matrix<K>::from_rows({a.coords(), b.coords(), c.coords()}).kernel();
    if (ker.size() != 1) throw std::invalid_argument("plane_through: points are collinear");
    return ProjPlane<K>(ProjPoint<K>(ker[0]).normalized().coords());
}

/// Faces of the tetrahedron with the given vertices; face k is opposite vertex k.
template <Field K>
std::vector<ProjPlane<K>> tetrahedron_faces(const std::vector<ProjPoint<K>>& v)
{
    if (v.size() != 4) throw std::invalid_argument("tetrahedron_faces: need four vertices");
    std::vector<ProjPlane<K>> f;
    for (int k = 0; k < 4; ++k) {
        std::vector<ProjPoint<K>> o;
        for (int j = 0; j < 4; ++j)
            if (j != k) o.push_back(v[j]);
        f.push_back(plane_through(o[0], o[1], o[2]));
    }
    return f;
}

template <Field K>
struct DesmicTriple {
    std::vector<ProjPoint<K>> t1_vertices;  // P and its three edge-involution images
    std::vector<ProjPoint<K>> t2_vertices;  // the four harmonic-homology images of P
    std::vector<MultiPoly<K>> quartics;     // xyzw and the two face products
    std::size_t rank = 0;                   // rank of the 3 x 35 coefficient matrix
    std::vector<K> dependency;              // l0 q0 + l1 q1 + l2 q2 = 0 when rank is 2
    bool pencil_dependent() const { return rank == 2; }
};

/// Monomials of degree d in n variables, in a fixed order.
inline std::vector<Exponent> monomials_of_degree(std::size_t n, int d)
{
    std::vector<Exponent> out;
    Exponent e(n, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == n) {
            e[i] = static_cast<std::uint16_t>(left);
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = static_cast<std::uint16_t>(k);
            self(self, i + 1, left - k);
        }
    };
    if (n == 0) return out;
    rec(rec, 0, d);
    return out;
}

/// Build the two tetrahedra of the desmic construction from a point P off V(xyzw).
template <Field K>
DesmicTriple<K> desmic_from_point(const ProjPoint<K>& P, const VarSetPtr& xyzw)
{
    detail::require_odd_characteristic<K>("desmic_from_point");
    if (P.size() != 4) throw std::invalid_argument("desmic_from_point: need a point of P^3");
    for (int i = 0; i < 4; ++i)
        if (P[i].is_zero()) throw std::invalid_argument("desmic_from_point: point lies on a face of V(xyzw)");
    DesmicTriple<K> t;
    t.t1_vertices.push_back(P);
    for (CoordEdge e : {CoordEdge{0, 1}, CoordEdge{0, 2}, CoordEdge{0, 3}}) {
        CoordEdge o{};
        int k = 0;
        for (int i = 0; i < 4; ++i)
            if (i != e[0] && i != e[1]) o[k++] = i;
        t.t1_vertices.push_back(apply(edge_involution<K>(o, e), P));
    }
    for (int k = 0; k < 4; ++k) {
        std::vector<K> h(4, K(0)), c(4, K(0));
        h[k] = K(1);
        c[k] = K(1);
        t.t2_vertices.push_back(apply(harmonic_homology(ProjPlane<K>(h), ProjPoint<K>(c)), P));
    }
    MultiPoly<K> q0 = MultiPoly<K>::constant(xyzw, K(1));
    for (int i = 0; i < 4; ++i) q0 = q0 * MultiPoly<K>::var(xyzw, i);
    t.quartics.push_back(q0);
    for (const auto* vs : {&t.t1_vertices, &t.t2_vertices}) {
        MultiPoly<K> q = MultiPoly<K>::constant(xyzw, K(1));
        for (const auto& f : tetrahedron_faces(*vs)) q = q * f.form(xyzw);
        t.quartics.push_back(q);
    }
    auto mons = monomials_of_degree(4, 4);
    Matrix<K> m(mons.size(), 3);
    for (std::size_t r = 0; r < mons.size(); ++r)
        for (int c = 0; c < 3; ++c) m(r, c) = t.quartics[c].coeff(mons[r]);
    t.rank = m.rank();
    if (t.rank == 2) t.dependency = m.kernel().at(0);
    return t;
}

/// Linear forms in Plucker coordinates, each a 6-vector of coefficients of (p12,...,p34).
template <Field K>
using PluckerForms = std::vector<std::vector<K>>;

namespace detail {
template <Field K>
PluckerForms<K> independent_three(const PluckerForms<K>& cands)
{
    PluckerForms<K> out;
    for (const auto& f : cands) {
        PluckerForms<K> trial = out;
        trial.push_back(f);
        if (Matrix<K>::from_rows(trial).rank() == trial.size()) out = trial;
        if (out.size() == 3) break;
    }
    return out;
}
}  // namespace detail

/// Three independent linear equations of the lines through p = [a,b,c,d].
/// The first three forms are the classical ones; the fourth, d p23 - c p24 + b p34,
/// replaces a dependent one when a = 0.
template <Field K>
PluckerForms<K> alpha_plane(const ProjPoint<K>& p)
{
    if (p.size() != 4) throw std::invalid_argument("alpha_plane: need a point of P^3");
    const K &a = p[0], &b = p[1], &c = p[2], &d = p[3];
    K z(0);
    PluckerForms<K> cands = {
        {-c, b, z, -a, z, z},
        {z, d, -c, z, z, a},
        {d, z, -b, z, a, z},
        {z, z, z, d, -c, b},
    };
    return detail::independent_three(cands);
}

/// Three independent linear equations of the lines in the plane h = V(ax+by+cz+dw):
/// sum_j h_j p_ij = 0 for each i (with p_ji = -p_ij).
template <Field K>
PluckerForms<K> beta_plane(const ProjPlane<K>& h)
{
    if (h.size() != 4) throw std::invalid_argument("beta_plane: need a plane of P^3");
    PluckerForms<K> cands;
    for (int i = 0; i < 4; ++i) {
        std::vector<K> f(6, K(0));
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            if (i < j) f[plucker_index(i, j)] = f[plucker_index(i, j)] + h[j];
            else f[plucker_index(j, i)] = f[plucker_index(j, i)] - h[j];
        }
        cands.push_back(std::move(f));
    }
    return detail::independent_three(cands);
}

/// True when two families of linear forms span the same subspace.
template <Field K>
bool same_span(const PluckerForms<K>& a, const PluckerForms<K>& b)
{
    if (a.empty() || b.empty()) return a.empty() && b.empty();
    std::size_t ra = Matrix<K>::from_rows(a).rank(), rb = Matrix<K>::from_rows(b).rank();
    PluckerForms<K> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    return ra == rb && Matrix<K>::from_rows(ab).rank() == ra;
}

template <Field K>
bool forms_vanish(const PluckerForms<K>& forms, const std::vector<K>& p)
{
    for (const auto& f : forms) {
        K s(0);
        for (std::size_t k = 0; k < f.size(); ++k) s = s + f[k] * p[k];
        if (!s.is_zero()) return false;
    }
    return true;
}

}  // namespace desmic

#endif
