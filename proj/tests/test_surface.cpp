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

#include "desmic/arith/f4.hpp"
#include "desmic/surface/char2.hpp"
#include "desmic/surface/cremona.hpp"
#include "desmic/surface/desmic_surface.hpp"
#include "desmic/surface/rdp.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace desmic;

namespace {

using Q = Rational;
using P = MultiPoly<Q>;

template <class K>
Form<K> xyzw_form(const std::string& which)
{
    auto vs = make_vars({"x", "y", "z", "w"});
    using PK = MultiPoly<K>;
    PK x = PK::var(vs, "x"), y = PK::var(vs, "y"), z = PK::var(vs, "z"), w = PK::var(vs, "w");
    if (which == "cone") return Form<K>(x * y + z * z, {"x", "y", "z", "w"});
    if (which == "a3") return Form<K>(x * y * w * w + z.pow(4), {"x", "y", "z", "w"});
    return Form<K>(x * x + y * y - z * z - w * w, {"x", "y", "z", "w"});
}

template <class K>
PowerSeriesTrunc<K> series(const std::string& which, int n = 10)
{
    auto vs = make_vars({"u", "v", "t"});
    using PK = MultiPoly<K>;
    PK u = PK::var(vs, 0), v = PK::var(vs, 1), t = PK::var(vs, 2);
    if (which == "A1") return {u * v + t * t, n};
    if (which == "A2") return {u * v + t.pow(3) + u * t.pow(5), n};
    if (which == "A3") return {u * v + t.pow(4), n};
    if (which == "sum") return {u * u + v * v + t.pow(3), n};
    if (which == "diff") return {u * u - v * v + t.pow(3), n};
    return {u * u + t.pow(3), n};
}

}  // namespace

TEST(Form, RejectsInhomogeneous)
{
    auto vs = make_vars({"a", "x", "y"});
    auto a = P::var(vs, "a"), x = P::var(vs, "x"), y = P::var(vs, "y");
    EXPECT_NO_THROW(Form<Q>(a * a * x + y, {"x", "y"}));
    EXPECT_THROW(Form<Q>(x * x + y, {"x", "y"}), std::invalid_argument);
    Form<Q> f(a * x * y, {"x", "y"});
    EXPECT_EQ(f.degree(), 2);
    EXPECT_EQ(f.parameter_names(), std::vector<std::string>{"a"});
}

TEST(SingularAt, DesmicMemberAndSmoothQuadric)
{
    auto f = desmic_quartic<Q>(1, 1, -2);
    EXPECT_TRUE(singular_at(f, ProjPoint<Q>{1, 1, 1, 1}).singular);
    EXPECT_FALSE(singular_at(f, ProjPoint<Q>{1, 2, 3, 5}).on_surface);
    auto q = xyzw_form<Q>("quadric");
    auto r = singular_at(q, ProjPoint<Q>{1, 0, 1, 0});
    EXPECT_TRUE(r.on_surface);
    EXPECT_FALSE(r.singular);
    EXPECT_EQ(r.jacobian_rank, 1u);
    EXPECT_THROW(desmic_quartic<Q>(1, 1, 1), std::invalid_argument);
}

TEST(NodeCheck, LocalForms)
{
    EXPECT_TRUE(node_check(xyzw_form<F2>("cone"), ProjPoint<F2>{0, 0, 0, 1}));
    EXPECT_TRUE(node_check(xyzw_form<Q>("cone"), ProjPoint<Q>{0, 0, 0, 1}));
    EXPECT_FALSE(node_check(xyzw_form<Q>("a3"), ProjPoint<Q>{0, 0, 0, 1}));
    EXPECT_FALSE(node_check(xyzw_form<F2>("a3"), ProjPoint<F2>{0, 0, 0, 1}));
    EXPECT_THROW(node_check(xyzw_form<Q>("quadric"), ProjPoint<Q>{1, 0, 1, 0}), std::invalid_argument);
}

TEST(DesmicSurface, TwelveNodesNumeric)
{
    auto f = desmic_quartic<Q>(1, 2, -3);
    for (const auto& p : desmic_nodes<Q>()) {
        SingularPointReport<Q> r;
        EXPECT_TRUE(node_check(f, p, &r)) << p.str();
        EXPECT_EQ(r.quadratic_rank, 3u);
    }
    for (const auto& p : desmic_vertices<Q>()) EXPECT_FALSE(singular_at(f, p).singular) << p.str();
}

TEST(DesmicSurface, TwelveNodesSymbolic)
{
    auto f = desmic_pencil<Q>();
    EXPECT_EQ(f.parameter_names(), (std::vector<std::string>{"a", "b"}));
    for (const auto& p : desmic_nodes<Q>()) {
        EXPECT_TRUE(singular_at(f, p).singular) << p.str();
        EXPECT_TRUE(node_check(f, p)) << p.str();
        auto disc = tangent_cone_discriminant(f, p);
        EXPECT_FALSE(disc.is_zero());
        // at a = b = 1 the generic discriminant specializes to the numeric one
        auto num = desmic_quartic<Q>(1, 2, -3);
        EXPECT_EQ(disc.eval({Q(1), Q(2)}), tangent_cone_discriminant(num, p).constant_term());
    }
}

TEST(DesmicSurface, EqualCoefficientsGiveFourPlanes)
{
    // a = b makes the member (y^2 - w^2)(x^2 - z^2) up to scale, so the nodes degenerate
    auto f = desmic_quartic<Q>(1, 1, -2);
    auto vs = f.vars();
    P x = P::var(vs, "x"), y = P::var(vs, "y"), z = P::var(vs, "z"), w = P::var(vs, "w");
    EXPECT_TRUE(proportionality(f.poly(), (y * y - w * w) * (x * x - z * z)).has_value());
    EXPECT_FALSE(node_check(f, ProjPoint<Q>{0, 0, 0, 1}));
    auto disc = tangent_cone_discriminant(desmic_pencil<Q>(), ProjPoint<Q>{0, 0, 0, 1});
    EXPECT_TRUE(disc.eval({Q(1), Q(1)}).is_zero());
}

TEST(DesmicSurface, SixteenLinesContained)
{
    auto f = desmic_pencil<Q>();
    auto lines = desmic_lines<Q>();
    ASSERT_EQ(lines.size(), 16u);
    auto g = desmic_quartic<Q>(2, 3, -5);
    for (const auto& l : lines) {
        EXPECT_TRUE(contains_line(f, l.line)) << l.name;
        EXPECT_TRUE(contains_line_by_samples(g, l.line)) << l.name;
    }
    LineP3<Q> generic(ProjPoint<Q>{1, 2, 0, 3}, ProjPoint<Q>{0, 1, 5, 7});
    EXPECT_FALSE(contains_line(f, generic));
    EXPECT_FALSE(contains_line_by_samples(g, generic));
}

TEST(DesmicSurface, IncidenceTwelveFourSixteenThree)
{
    std::vector<LineP3<Q>> ls;
    for (const auto& l : desmic_lines<Q>()) ls.push_back(l.line);
    auto inc = line_point_incidence(ls, desmic_nodes<Q>());
    std::vector<int> per_point(12, 0);
    for (const auto& on : inc) {
        EXPECT_EQ(on.size(), 3u);
        for (int i : on) ++per_point[i];
    }
    for (int c : per_point) EXPECT_EQ(c, 4);
}

TEST(DesmicSurface, LinesClosedUnderSignsAndPermutations)
{
    std::vector<LineP3<Q>> ls;
    for (const auto& l : desmic_lines<Q>()) ls.push_back(l.line);
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        for (int signs = 0; signs < 16; ++signs) {
            auto img = [&](const ProjPoint<Q>& p) {
                std::vector<Q> c(4);
                for (int i = 0; i < 4; ++i) c[perm[i]] = (signs >> i & 1) ? -p[i] : p[i];
                return ProjPoint<Q>(c);
            };
            for (const auto& l : ls) {
                LineP3<Q> m(img(l.first()), img(l.second()));
                EXPECT_NE(std::find(ls.begin(), ls.end(), m), ls.end());
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(DesmicSurface, TangentPlaneCondition)
{
    auto f = desmic_pencil<Q>();
    ProjPlane<Q> h1{1, 1, 0, 0}, h2{1, 0, 0, 1};
    auto t = residual_conic_tangency(f, h1, h2);
    EXPECT_TRUE(t.rank_one);

    // Oracle: along the line the gradient is lam*h1 + mu*h2, and the plane u*h1 + v*h2
    // is tangent at that point iff u*mu - v*lam = 0. Check two points of the line.
    auto vs = f.vars();
    for (auto pt : {ProjPoint<Q>{1, -1, 0, -1}, ProjPoint<Q>{2, -2, 3, -2}}) {
        std::map<std::string, P> im;
        for (int k = 0; k < 4; ++k) im[vs->name(f.coords()[k])] = P::constant(t.ring, pt[k]);
        std::vector<P> g;
        for (const auto& d : f.gradient()) g.push_back(d.subst(im, t.ring));
        // gradient = lam*(1,1,0,0) + mu*(1,0,0,1): lam = g_y, mu = g_w
        P lam = g[1], mu = g[3];
        EXPECT_TRUE(g[2].is_zero());
        EXPECT_TRUE(verify_identity(g[0], lam + mu));
        // the tangent plane (u, v) = (beta, -alpha) must satisfy u*mu - v*lam = 0
        EXPECT_TRUE((t.beta * mu + t.alpha * lam).is_zero());
    }

    // with c = -a - b the computed condition is u (b - c) + v (a - c)
    auto a = P::var(t.ring, "a"), b = P::var(t.ring, "b");
    P c = -a - b;
    EXPECT_TRUE(verify_identity(t.alpha * (a - c), t.beta * (b - c))) << t.condition().str();
    EXPECT_FALSE(verify_identity(t.alpha * (a + b), t.beta * (b + c)));
    EXPECT_FALSE(t.line_discriminant.is_zero());
    auto s = P::var(t.ring, "s");
    EXPECT_TRUE(verify_identity(t.restriction, s * s * t.conic));
    EXPECT_THROW(residual_conic_tangency(f, ProjPlane<Q>{1, 1, 0, 0}, ProjPlane<Q>{0, 0, 1, 1}),
                 std::invalid_argument);
}

TEST(DesmicSurface, ProjectedPointsLieOnQuartic)
{
    EXPECT_LE(projected_24_points_quartic_rank(ProjPoint<Q>{1, 2, 3, 7}), 14u);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-50, 50);
    std::vector<ProjPoint<Q>> pts;
    while (pts.size() < 24) pts.push_back(ProjPoint<Q>{d(rng), d(rng), d(rng), 1});
    EXPECT_EQ(projected_points_quartic_rank(pts, ProjPoint<Q>{1, 2, 3, 7}), 15u);
    EXPECT_THROW(projected_24_points_quartic_rank(ProjPoint<Q>{1, 0, 0, 2}), std::invalid_argument);
}

TEST(Rdp, Examples)
{
    EXPECT_TRUE(rdp_an_type(series<Q>("A3"), 8).is_a(3));
    EXPECT_TRUE(rdp_an_type(series<Q>("A1"), 8).is_a(1));
    EXPECT_TRUE(rdp_an_type(series<Q>("A2"), 8).is_a(2));
    EXPECT_TRUE(rdp_an_type(series<F2>("A3"), 8).is_a(3));
    EXPECT_TRUE(rdp_an_type(series<F2>("A1"), 8).is_a(1));
    EXPECT_TRUE(rdp_an_type(series<Q>("diff"), 8).is_a(2));
    EXPECT_THROW(rdp_an_type(series<Q>("sum"), 8), std::domain_error);
    EXPECT_TRUE(rdp_an_type(series<Gaussian>("sum"), 8).is_a(2));
    EXPECT_THROW(rdp_an_type(series<Q>("rank1"), 8), std::domain_error);
    EXPECT_EQ(rdp_an_type(series<Q>("A3"), 2).kind, AnVerdict::Kind::Inconclusive);
    EXPECT_EQ(rdp_an_type(series<Q>("A3", 3), 8).kind, AnVerdict::Kind::Inconclusive);
}

TEST(Rdp, InvariantUnderCoordinateChangeAndUnits)
{
    auto vs = make_vars({"u", "v", "t"});
    P u = P::var(vs, 0), v = P::var(vs, 1), t = P::var(vs, 2);
    for (int n = 1; n <= 5; ++n) {
        P f = u * v + t.pow(n + 1) + u * t.pow(3) + v * v * t;
        P g = f.subst({u + Q(2) * v + t * t, Q(3) * u - v, t + u * v}) * (P(1) + u + Q(5) * t * t);
        auto r = rdp_an_type(PowerSeriesTrunc<Q>(g, 12), 10);
        EXPECT_TRUE(r.is_a(n)) << n << " " << r.str();
    }
}

TEST(Identities, SteinerianOverIntegersAndF2)
{
    auto check = [](auto tag) {
        using K = decltype(tag);
        auto vs = cremona_ring();
        auto q = cubic_normal_form_quadric<K>(vs);
        auto f = tritangent_cubic(q);
        auto g = steinerian_equation(q);
        auto w = MultiPoly<K>::var(vs, "w");
        const auto& fp = f.poly();
        return verify_identity(fp * fp - f.partial(0) * f.partial(1) * f.partial(2), g.poly() * w * w);
    };
    EXPECT_TRUE(check(Q()));
    EXPECT_TRUE(check(F2()));
    EXPECT_TRUE(check(Fp<3>()));
}

TEST(Cremona, SteinerianMatchesExplicitQuartic)
{
    auto vs = cremona_ring();
    auto g = steinerian_equation(cubic_normal_form_quadric<Q>(vs));
    EXPECT_TRUE(verify_identity(g.poly(), cremona_quartic_explicit<Q>(vs).poly()));
    EXPECT_EQ(g.degree(), 4);
    auto g2 = steinerian_equation(cubic_normal_form_quadric<F2>(vs));
    EXPECT_TRUE(verify_identity(g2.poly(), cremona_quartic_char2_explicit<F2>(vs).poly()));
    // the mod-2 reduction of the integral quartic is the same polynomial
    auto red = cremona_quartic_explicit<Q>(vs).poly().map_coeffs<F2>([](const Q& c) {
        mpz_class r = c.num() % 2;
        return F2(r == 0 ? 0 : 1);
    });
    EXPECT_TRUE(verify_identity(red, g2.poly()));
    auto parts = cremona_char2_partials_explicit<F2>(vs);
    for (int k = 0; k < 4; ++k) EXPECT_TRUE(verify_identity(g2.partial(k), parts[k])) << k;
    EXPECT_TRUE(g2.partial(3).is_zero());
}

TEST(Cremona, QuadricContainsResidualConics)
{
    auto vs = make_vars({"a", "b", "c", "d", "x", "y", "z", "w", "al", "be", "ga"});
    auto q = cubic_normal_form_quadric<Q>(vs);
    auto f = tritangent_cubic(q);
    P al = P::var(vs, "al"), be = P::var(vs, "be"), ga = P::var(vs, "ga");
    P x = P::var(vs, "x"), y = P::var(vs, "y"), z = P::var(vs, "z"), w = P::var(vs, "w");
    EXPECT_EQ(cremona_quadric(q, P(0), P(0), P(0)).poly(), q.poly());
    auto Qd = cremona_quadric(q, al, be, ga).poly();
    struct Case {
        const char* var;
        P image, conic;
    };
    std::vector<Case> cases{{"x", al * w, q.poly() + al * y * z},
                            {"y", be * w, q.poly() + be * x * z},
                            {"z", ga * w, q.poly() + ga * x * y}};
    for (const auto& c : cases) {
        auto on_quadric = Qd.subst({{c.var, c.image}}, vs);
        auto conic = c.conic.subst({{c.var, c.image}}, vs);
        EXPECT_TRUE(verify_identity(on_quadric, conic)) << c.var;
        // the cubic cut by the plane is w times the conic
        EXPECT_TRUE(verify_identity(f.poly().subst({{c.var, c.image}}, vs), w * conic)) << c.var;
    }
}

TEST(Cremona, JacobianSolutionsLieOnSteinerian)
{
    // Oracle: over F_13, find (alpha, beta, gamma) making the quadric singular by
    // brute force, take its singular point and evaluate G there.
    using K = Fp<13>;
    using PK = MultiPoly<K>;
    auto vs = cremona_ring();
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(0, 12);
    int found = 0;
    for (int trial = 0; trial < 6; ++trial) {
        std::map<std::string, K> par{{"a", K(d(rng))}, {"b", K(d(rng))}, {"c", K(d(rng))}, {"d", K(d(rng))}};
        auto q = cubic_normal_form_quadric<K>(vs);
        auto qs = Form<K>(q.poly().specialize(par), xyzw_names());
        auto g = steinerian_equation(qs);
        K al(d(rng)), be(d(rng));
        for (int gi = 0; gi < 13; ++gi) {
            auto quad = cremona_quadric(qs, PK::constant(vs, al), PK::constant(vs, be), PK::constant(vs, K(gi)));
            Matrix<K> m(4, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    std::vector<K> e(8, K(0));
                    e[4 + j] = K(1);
                    m(i, j) = quad.partial(i).eval(e);
                }
            for (const auto& ker : m.kernel()) {
                std::vector<K> pt(8, K(0));
                for (int k = 0; k < 4; ++k) pt[4 + k] = ker[k];
                EXPECT_TRUE(g.poly().eval(pt).is_zero());
                ++found;
            }
        }
    }
    EXPECT_GT(found, 0);
}

TEST(Cremona, DiscriminantMatrixIsHessianOfWeb)
{
    auto r = web_ring();
    auto h = quadric_hessian(homogenized_web_quadric<Q>(r));
    auto m = web_discriminant_matrix<Q>(r);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) EXPECT_TRUE(verify_identity(h[i][j], m[i][j])) << i << j;
    std::vector<std::pair<std::string, std::string>> pairs{{"al0", "al1"}, {"be0", "be1"}, {"ga0", "ga1"}};
    EXPECT_EQ(multidegree(det_poly_matrix(m), pairs), (std::vector<int>{4, 4, 4}));

    auto h2 = quadric_hessian(homogenized_web_quadric<F2>(r));
    auto m2 = web_pfaffian_matrix<F2>(r);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) EXPECT_TRUE(verify_identity(h2[i][j], m2[i][j])) << i << j;
    auto pf = pfaffian_poly_matrix(m2);
    EXPECT_EQ(multidegree(pf, pairs), (std::vector<int>{2, 2, 2}));
    EXPECT_TRUE(verify_identity(pf * pf, det_poly_matrix(m2)));
}

TEST(Char2, ParametricSingularPoints)
{
    auto f = cremona_quartic_char2_explicit<F2>(cremona_ring());
    auto pts = char2_cremona_points<F2>();
    ASSERT_EQ(pts.size(), 4u);
    for (const auto& p : pts) {
        auto r = char2_singular_at(f, p);
        EXPECT_TRUE(r.singular) << r.point;
        if (p.name != "P0") {
            EXPECT_EQ(p.relation.rel.degree(p.ring->index(p.relation.var)), 4);
        }
    }
    // the second coordinate must be d z2^2; with d z2 the point is not singular
    auto typo = pts[1];
    typo.coords[1] = MultiPoly<F2>::var(typo.ring, "d") * MultiPoly<F2>::var(typo.ring, "z2");
    EXPECT_FALSE(char2_singular_at(f, typo).singular);
    // without the relation the family points are not singular
    auto r = singular_at(f, pts[0].coords, pts[0].ring);
    EXPECT_FALSE(r.singular);
}

TEST(Char2, ExtraPointIsA3AtSpecialParameters)
{
    auto f4 = cremona_char2_at<F4>(F4(0), F4(0), F4(1), F4(1));
    ProjPoint<F4> p0{0, 0, 0, 1};
    EXPECT_TRUE(singular_at(f4, p0).singular);
    EXPECT_TRUE(an_type_at(f4, p0).is_a(3));
    // the tangent-cone conic y^2 + yz + z^2 only splits over F_4
    auto f2 = cremona_char2_at<F2>(F2(0), F2(0), F2(1), F2(1));
    EXPECT_THROW(an_type_at(f2, ProjPoint<F2>{0, 0, 0, 1}), std::domain_error);
}

TEST(Char2, KummerQuartic)
{
    auto check = [](auto alpha) {
        using K = decltype(alpha);
        auto k = kummer_char2_quartic(alpha);
        for (const auto& l : k.lines) EXPECT_TRUE(contains_line(k.form, l.line)) << l.name;
        for (const auto& p : k.points) {
            EXPECT_TRUE(singular_at(k.form, p).singular) << p.str();
            EXPECT_TRUE(an_type_at(k.form, p).is_a(3)) << p.str();
        }
        std::vector<int> per_point(6, 0);
        for (const auto& on : k.incidence) {
            EXPECT_EQ(on.size(), 3u);
            for (int i : on) ++per_point[i];
        }
        for (int c : per_point) EXPECT_EQ(c, 2);
        EXPECT_FALSE(singular_at(k.form, ProjPoint<K>{1, 1, 1, 1}).singular);
    };
    check(F2(1));
    check(F4::omega());
    EXPECT_THROW(kummer_char2_quartic(F2(0)), std::invalid_argument);
}
