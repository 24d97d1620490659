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

#ifndef DESMIC_SURFACE_CREMONA_HPP
#define DESMIC_SURFACE_CREMONA_HPP

#include "desmic/arith/poly_matrix.hpp"
#include "desmic/surface/hypersurface.hpp"

#include <string>
#include <vector>

namespace desmic {

/// Ring of the normal form of a cubic surface with tritangent plane w = 0.
inline VarSetPtr cremona_ring()
{
    return make_vars({"a", "b", "c", "d", "x", "y", "z", "w"});
}

/// Ring for the homogenized quadric family: the cubic parameters and (alpha, beta, gamma) in (P^1)^3.
inline VarSetPtr web_ring()
{
    return make_vars({"a", "b", "c", "d", "x", "y", "z", "w", "al0", "al1", "be0", "be1", "ga0", "ga1"});
}

inline const std::vector<std::string>& xyzw_names()
{
    static const std::vector<std::string> n{"x", "y", "z", "w"};
    return n;
}

/// q = (a w + b x + c y + d z) w + x^2 + y^2 + z^2.
template <Field K>
Form<K> cubic_normal_form_quadric(const VarSetPtr& vs)
{
    using P = MultiPoly<K>;
    auto v = [&](const char* n) { return P::var(vs, n); };
    P q = (v("a") * v("w") + v("b") * v("x") + v("c") * v("y") + v("d") * v("z")) * v("w") + v("x") * v("x") +
          v("y") * v("y") + v("z") * v("z");
    return Form<K>(q, xyzw_names());
}

/// The cubic q w + x y z with tritangent plane w = 0.
template <Field K>
Form<K> tritangent_cubic(const Form<K>& q)
{
    using P = MultiPoly<K>;
    const auto& vs = q.vars();
    return Form<K>(q.poly() * P::var(vs, "w") + P::var(vs, "x") * P::var(vs, "y") * P::var(vs, "z"), xyzw_names());
}

/// q + al yz + be xz + ga xy - (al be z + al ga y + be ga x) w + al be ga w^2.
template <Field K>
Form<K> cremona_quadric(const Form<K>& q, const MultiPoly<K>& al, const MultiPoly<K>& be, const MultiPoly<K>& ga)
{
    using P = MultiPoly<K>;
    const auto& vs = q.vars();
    P x = P::var(vs, "x"), y = P::var(vs, "y"), z = P::var(vs, "z"), w = P::var(vs, "w");
    P r = q.poly() + al * y * z + be * x * z + ga * x * y - (al * be * z + al * ga * y + be * ga * x) * w +
          al * be * ga * w * w;
    return Form<K>(r, xyzw_names());
}

/// G = q^2 - q_y q_z yz - q_x q_z xz - q_x q_y xy - q_x q_y q_z w + xyz q_w.
template <Field K>
Form<K> steinerian_equation(const Form<K>& q)
{
    using P = MultiPoly<K>;
    const auto& vs = q.vars();
    P x = P::var(vs, "x"), y = P::var(vs, "y"), z = P::var(vs, "z"), w = P::var(vs, "w");
    P qx = q.partial(0), qy = q.partial(1), qz = q.partial(2), qw = q.partial(3);
    const P& f = q.poly();
    P g = f * f - qy * qz * y * z - qx * qz * x * z - qx * qy * x * y - qx * qy * qz * w + x * y * z * qw;
    return Form<K>(g, xyzw_names());
}

/// Expanded quartic with the normal-form parameters, written out term by term.
template <Field K>
Form<K> cremona_quartic_explicit(const VarSetPtr& vs)
{
    using P = MultiPoly<K>;
    auto v = [&](const char* n) { return P::var(vs, n); };
    P a = v("a"), b = v("b"), c = v("c"), d = v("d"), x = v("x"), y = v("y"), z = v("z"), w = v("w");
    P two = P::constant(vs, K(2));
    P bx = b * w + two * x, cy = c * w + two * y, dz = d * w + two * z;
    P sq = a * w * w + b * w * x + c * w * y + d * w * z + x * x + y * y + z * z;
    P g = -bx * cy * dz * w - bx * cy * x * y - bx * dz * x * z - cy * dz * y * z +
          (two * a * w + b * x + c * y + d * z) * x * y * z + sq * sq;
    return Form<K>(g, xyzw_names());
}

/// Characteristic 2 form of the same quartic.
template <Field K>
Form<K> cremona_quartic_char2_explicit(const VarSetPtr& vs)
{
    using P = MultiPoly<K>;
    auto v = [&](const char* n) { return P::var(vs, n); };
    P a = v("a"), b = v("b"), c = v("c"), d = v("d"), x = v("x"), y = v("y"), z = v("z"), w = v("w");
    P w2 = w * w;
    P sq = a * w2 + b * w * x + c * w * y + d * w * z + x * x + y * y + z * z;
    P f = b * c * d * w2 * w2 + b * c * w2 * x * y + b * d * w2 * x * z + c * d * w2 * y * z +
          (b * x + c * y + d * z) * x * y * z + sq * sq;
    return Form<K>(f, xyzw_names());
}

/// Partials (F_x, F_y, F_z, F_w) in characteristic 2, written in factored form.
template <Field K>
std::vector<MultiPoly<K>> cremona_char2_partials_explicit(const VarSetPtr& vs)
{
    using P = MultiPoly<K>;
    auto v = [&](const char* n) { return P::var(vs, n); };
    P b = v("b"), c = v("c"), d = v("d"), x = v("x"), y = v("y"), z = v("z"), w = v("w");
    return {(c * y + d * z) * (y * z + b * w * w), (b * x + d * z) * (x * z + c * w * w),
            (b * x + c * y) * (x * y + d * w * w), P::constant(vs, K(0))};
}

/// The quadric of the web with homogenized (alpha, beta, gamma), multiplied through by al0 be0 ga0.
template <Field K>
MultiPoly<K> homogenized_web_quadric(const VarSetPtr& ring)
{
    using P = MultiPoly<K>;
    auto v = [&](const char* n) { return P::var(ring, n); };
    P a = v("al0"), A = v("al1"), b = v("be0"), B = v("be1"), g = v("ga0"), G = v("ga1");
    P x = v("x"), y = v("y"), z = v("z"), w = v("w");
    P q = (v("a") * w + v("b") * x + v("c") * y + v("d") * z) * w + x * x + y * y + z * z;
    return a * b * g * q + A * b * g * y * z + a * B * g * x * z + a * b * G * x * y -
           (A * B * g * z + A * b * G * y + a * B * G * x) * w + A * B * G * w * w;
}

/// Symmetric 4x4 matrix whose determinant is the discriminant of the web, as displayed.
template <Field K>
PolyMatrix<K> web_discriminant_matrix(const VarSetPtr& ring)
{
    using P = MultiPoly<K>;
    auto v = [&](const char* n) { return P::var(ring, n); };
    P a0 = v("al0"), a1 = v("al1"), b0 = v("be0"), b1 = v("be1"), g0 = v("ga0"), g1 = v("ga1");
    P two = P::constant(ring, K(2));
    P e = a0 * b0 * g0;
    P m03 = -a0 * b1 * g1 + v("b") * e, m13 = -a1 * b0 * g1 + v("c") * e, m23 = -a1 * b1 * g0 + v("d") * e;
    return {{two * e, a0 * b0 * g1, a0 * b1 * g0, m03},
            {a0 * b0 * g1, two * e, a1 * b0 * g0, m13},
            {a0 * b1 * g0, a1 * b0 * g0, two * e, m23},
            {m03, m13, m23, two * (v("a") * e + a1 * b1 * g1)}};
}

/// Alternating matrix whose Pfaffian is the discriminant in characteristic 2.
template <Field K>
PolyMatrix<K> web_pfaffian_matrix(const VarSetPtr& ring)
{
    using P = MultiPoly<K>;
    auto v = [&](const char* n) { return P::var(ring, n); };
    P a0 = v("al0"), a1 = v("al1"), b0 = v("be0"), b1 = v("be1"), g0 = v("ga0"), g1 = v("ga1");
    P e = a0 * b0 * g0, zero = P::constant(ring, K(0));
    P m03 = a0 * b1 * g1 + v("b") * e, m13 = a1 * b0 * g1 + v("c") * e, m23 = a1 * b1 * g0 + v("d") * e;
    return {{zero, a0 * b0 * g1, a0 * b1 * g0, m03},
            {a0 * b0 * g1, zero, a1 * b0 * g0, m13},
            {a0 * b1 * g0, a1 * b0 * g0, zero, m23},
            {m03, m13, m23, zero}};
}

/// Hessian (formal second partials in x, y, z, w) of a quadric.
template <Field K>
PolyMatrix<K> quadric_hessian(const MultiPoly<K>& q)
{
    std::vector<std::size_t> idx;
    for (const auto& n : xyzw_names()) idx.push_back(q.vars()->index(n));
    return polar_matrix(q, idx);
}

/// Multidegree of a homogeneous polynomial in each of the given variable pairs.
template <Field K>
std::vector<int> multidegree(const MultiPoly<K>& p, const std::vector<std::pair<std::string, std::string>>& pairs)
{
    std::vector<int> out(pairs.size(), -1);
    for (const auto& [e, c] : p.terms())
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            int d = e[p.vars()->index(pairs[k].first)] + e[p.vars()->index(pairs[k].second)];
            if (out[k] < 0) out[k] = d;
            if (out[k] != d) throw std::invalid_argument("multidegree: not multihomogeneous");
        }
    return out;
}

}  // namespace desmic

#endif
