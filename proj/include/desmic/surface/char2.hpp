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

#ifndef DESMIC_SURFACE_CHAR2_HPP
#define DESMIC_SURFACE_CHAR2_HPP

#include "desmic/surface/cremona.hpp"
#include "desmic/surface/desmic_surface.hpp"
#include "desmic/surface/rdp.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace desmic {

/// A singular point of the characteristic 2 quartic whose coordinates live in
/// K[a,b,c,d,z] modulo one relation in z.
template <Field K>
struct ParametricPoint {
    std::string name;
    VarSetPtr ring;
    std::vector<MultiPoly<K>> coords;
    Relation<K> relation;
};

/// The three four-point families and the extra point P0, each in its own quotient ring.
template <Field K>
std::vector<ParametricPoint<K>> char2_cremona_points()
{
    static_assert(K::characteristic == 2, "char2_cremona_points: characteristic 2 only");
    using P = MultiPoly<K>;
    std::vector<ParametricPoint<K>> out;
    auto ring_for = [](const std::string& z) { return make_vars({"a", "b", "c", "d", z}); };
    {
        auto r = ring_for("z1");
        P a = P::var(r, "a"), b = P::var(r, "b"), c = P::var(r, "c"), d = P::var(r, "d"), z = P::var(r, "z1");
        P rel = b * b * d * z.pow(3) + b * b * z.pow(4) + d * d * z.pow(4) + a * b * b * z * z + b.pow(3) * c * z + b.pow(4);
        out.push_back({"family 1", r, {d * z * z, b * b, b * z * z, b * z}, {rel, "z1"}});
    }
    {
        auto r = ring_for("z2");
        P a = P::var(r, "a"), b = P::var(r, "b"), c = P::var(r, "c"), d = P::var(r, "d"), z = P::var(r, "z2");
        P rel = c * c * d * z.pow(3) + c * c * z.pow(4) + d * d * z.pow(4) + a * c * c * z * z + b * c.pow(3) * z + c.pow(4);
        // y = d z2^2, mirroring the x-coordinate of the first family
        out.push_back({"family 2", r, {c * c, d * z * z, c * z * z, c * z}, {rel, "z2"}});
    }
    {
        auto r = ring_for("z3");
        P a = P::var(r, "a"), b = P::var(r, "b"), c = P::var(r, "c"), d = P::var(r, "d"), z = P::var(r, "z3");
        P rel = d * z.pow(3) + z.pow(4) + a * z * z + b * c * z + b * b + c * c;
        out.push_back({"family 3", r, {c, b, z * z, z}, {rel, "z3"}});
    }
    {
        auto r = ring_for("z0");
        P a = P::var(r, "a"), b = P::var(r, "b"), c = P::var(r, "c"), d = P::var(r, "d"), z = P::var(r, "z0");
        P num = b.pow(5) * c.pow(5) * d + a * a * b.pow(4) * c.pow(4);
        P den = b.pow(3) * c.pow(3) * d.pow(3) + b.pow(4) * c.pow(4) + b.pow(4) * d.pow(4) + c.pow(4) * d.pow(4);
        out.push_back({"P0", r, {c * d * z, b * d * z, b * c * z, b * c}, {den * z.pow(4) - num, "z0"}});
    }
    return out;
}

/// Singularity of the characteristic 2 quartic at a parametric point, in its quotient ring.
template <Field K>
SingularPointReport<K> char2_singular_at(const Form<K>& f, const ParametricPoint<K>& p)
{
    auto r = singular_at(f, p.coords, p.ring, {p.relation});
    r.point = p.name + " " + r.point;
    return r;
}

/// Specialize the characteristic 2 quartic at numeric parameters.
template <Field K>
Form<K> cremona_char2_at(const K& a, const K& b, const K& c, const K& d)
{
    auto f = cremona_quartic_char2_explicit<K>(cremona_ring());
    auto s = f.poly().specialize({{"a", a}, {"b", b}, {"c", c}, {"d", d}});
    return Form<K>(s.change_ring(make_vars(xyzw_names())), xyzw_names());
}

/// F = x y z w + alpha (x + y + z + w)^4 with its four lines and six points.
template <Field K>
struct KummerChar2 {
    Form<K> form;
    std::vector<NamedLine<K>> lines;
    std::vector<ProjPoint<K>> points;
    std::vector<std::vector<int>> incidence;  // per line, indices of the points on it
};

template <Field K>
KummerChar2<K> kummer_char2_quartic(const K& alpha)
{
    static_assert(K::characteristic == 2, "kummer_char2_quartic: characteristic 2 only");
    if (alpha.is_zero()) throw std::invalid_argument("kummer_char2_quartic: alpha must be nonzero");
    auto vs = make_vars(xyzw_names());
    using P = MultiPoly<K>;
    P x = P::var(vs, "x"), y = P::var(vs, "y"), z = P::var(vs, "z"), w = P::var(vs, "w");
    KummerChar2<K> r{Form<K>(x * y * z * w + alpha * (x + y + z + w).pow(4), xyzw_names()), {}, {}, {}};
    ProjPlane<K> sum{1, 1, 1, 1};
    const char* names[] = {"x", "y", "z", "w"};
    for (int i = 0; i < 4; ++i) {
        std::vector<K> h(4, K(0));
        h[i] = K(1);
        r.lines.push_back({std::string("V(") + names[i] + ",x+y+z+w)", ProjPlane<K>(h), sum,
                           LineP3<K>::from_planes(ProjPlane<K>(h), sum)});
    }
    r.points = {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};
    std::vector<LineP3<K>> ls;
    for (const auto& l : r.lines) ls.push_back(l.line);
    for (const auto& l : ls) {
        std::vector<int> on;
        for (std::size_t i = 0; i < r.points.size(); ++i)
            if (l.contains(r.points[i])) on.push_back(static_cast<int>(i));
        r.incidence.push_back(on);
    }
    return r;
}

}  // namespace desmic

#endif
