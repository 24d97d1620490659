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

#include "desmic/geom/proj.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace desmic;

namespace {

using Q = Rational;
using G = Gaussian;

template <class K>
ProjPoint<K> pt(std::initializer_list<long long> c)
{
    return ProjPoint<K>(c);
}

template <class K>
ProjPoint<K> random_point(std::mt19937& rng)
{
    std::uniform_int_distribution<int> d(-9, 9);
    for (;;) {
        std::vector<K> c;
        bool nz = false;
        for (int i = 0; i < 4; ++i) {
            c.emplace_back(d(rng));
            nz = nz || d(rng) != 0;
        }
        try {
            return ProjPoint<K>(c);
        } catch (const std::invalid_argument&) {
        }
    }
}

template <class K>
bool same_point_set(const std::vector<ProjPoint<K>>& a, const std::vector<ProjPoint<K>>& b)
{
    if (a.size() != b.size()) return false;
    for (const auto& p : a) {
        int hits = 0;
        for (const auto& q : b) hits += (p == q);
        if (hits != 1) return false;
    }
    return true;
}

}  // namespace

TEST(Plucker, CoordinateEdge)
{
    auto l = plucker_from_points(pt<Q>({1, 0, 0, 0}), pt<Q>({0, 1, 0, 0}));
    EXPECT_EQ(l.plucker(), (std::vector<Q>{1, 0, 0, 0, 0, 0}));
    EXPECT_THROW(plucker_from_points(pt<Q>({1, 2, 0, 0}), pt<Q>({2, 4, 0, 0})), std::invalid_argument);
}

TEST(Plucker, MinorsOracle)
{
    auto l = plucker_from_points(pt<Q>({1, -1, 0, 0}), pt<Q>({0, 0, 1, -1}));
    // 2x2 minors of [[1,-1,0,0],[0,0,1,-1]] computed by hand
    EXPECT_EQ(l.plucker(), (std::vector<Q>{0, 1, -1, -1, 1, 0}));
    EXPECT_TRUE(plucker_relation(l.plucker()).is_zero());
}

TEST(Plucker, RelationHoldsAndScaleInvariant)
{
    std::mt19937 rng(1);
    for (int t = 0; t < 50; ++t) {
        auto a = random_point<Q>(rng), b = random_point<Q>(rng);
        if (Matrix<Q>::from_rows({a.coords(), b.coords()}).rank() < 2) continue;
        LineP3<Q> l(a, b);
        EXPECT_TRUE(plucker_relation(l.plucker()).is_zero());
        LineP3<Q> m(l.point(Q(2), Q(3)), l.point(Q(-1), Q(5)));
        EXPECT_EQ(l, m);
    }
}

TEST(Plucker, LineFromPlanesAnnihilatesBoth)
{
    ProjPlane<Q> u{1, 1, 0, 0}, v{0, 0, 1, 1};
    auto l = LineP3<Q>::from_planes(u, v);
    EXPECT_TRUE(l.in_plane(u));
    EXPECT_TRUE(l.in_plane(v));
    EXPECT_TRUE(forms_vanish(beta_plane(u), l.plucker()));
    EXPECT_TRUE(forms_vanish(beta_plane(v), l.plucker()));
}

TEST(Klein, PrintedTransform)
{
    auto k = klein_from_plucker(std::vector<G>{1, 0, 0, 0, 0, 1});
    EXPECT_EQ(k, (std::vector<G>{2, 0, 0, 0, 0, 0}));
    EXPECT_THROW(klein_from_plucker(std::vector<Q>{1, 0, 0, 0, 0, 1}), std::domain_error);
    EXPECT_THROW(klein_from_plucker(std::vector<Fp<7>>{1, 0, 0, 0, 0, 1}), std::domain_error);
}

TEST(Klein, LandsOnSumOfSquares)
{
    std::mt19937 rng(2);
    for (int t = 0; t < 50; ++t) {
        auto a = random_point<G>(rng), b = random_point<G>(rng);
        if (Matrix<G>::from_rows({a.coords(), b.coords()}).rank() < 2) continue;
        EXPECT_TRUE(klein_quadric(klein_from_plucker(LineP3<G>(a, b))).is_zero());
        auto af = random_point<Fp<13>>(rng), bf = random_point<Fp<13>>(rng);
        if (Matrix<Fp<13>>::from_rows({af.coords(), bf.coords()}).rank() < 2) continue;
        EXPECT_TRUE(klein_quadric(klein_from_plucker(LineP3<Fp<13>>(af, bf))).is_zero());
    }
}

TEST(Klein, BaseLocusLinesGiveSixteenPoints)
{
    // the 16 lines V(x+-y, x+-w), V(x+-y, y+-z), V(z+-w, x+-w), V(z+-w, y+-z)
    std::vector<std::pair<ProjPlane<G>, ProjPlane<G>>> planes;
    for (int s : {1, -1})
        for (int t : {1, -1}) {
            planes.push_back({ProjPlane<G>{1, s, 0, 0}, ProjPlane<G>{1, 0, 0, t}});
            planes.push_back({ProjPlane<G>{1, s, 0, 0}, ProjPlane<G>{0, 1, t, 0}});
            planes.push_back({ProjPlane<G>{0, 0, 1, s}, ProjPlane<G>{1, 0, 0, t}});
            planes.push_back({ProjPlane<G>{0, 0, 1, s}, ProjPlane<G>{0, 1, t, 0}});
        }
    std::vector<ProjPoint<G>> expected;
    G i = G::i();
    for (int m = 0; m < 64; ++m) {
        std::vector<G> c;
        for (int k = 0; k < 3; ++k) c.push_back((m >> k) & 1 ? -i : i);
        for (int k = 3; k < 6; ++k) c.push_back((m >> k) & 1 ? G(-1) : G(1));
        if (!(c[0] * c[1] * c[2] + i * c[3] * c[4] * c[5]).is_zero()) continue;
        ProjPoint<G> p(c);
        bool dup = false;
        for (const auto& q : expected) dup = dup || q == p;
        if (!dup) expected.push_back(p);
    }
    ASSERT_EQ(expected.size(), 16u);
    std::vector<ProjPoint<G>> got;
    for (const auto& [u, v] : planes) got.emplace_back(klein_from_plucker(LineP3<G>::from_planes(u, v)));
    EXPECT_TRUE(same_point_set(got, expected));
}

TEST(Involutions, HarmonicHomology)
{
    auto m = harmonic_homology(ProjPlane<Q>{1, 0, 0, 0}, pt<Q>({1, 0, 0, 0}));
    EXPECT_EQ(m, (Matrix<Q>{{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    EXPECT_THROW(harmonic_homology(ProjPlane<Q>{1, 0, 0, 0}, pt<Q>({0, 1, 0, 0})), std::invalid_argument);
    EXPECT_THROW(harmonic_homology(ProjPlane<F2>{1, 0, 0, 0}, pt<F2>({1, 0, 0, 0})), std::domain_error);

    std::vector<ProjPoint<Q>> images;
    for (int k = 0; k < 4; ++k) {
        std::vector<Q> h(4, Q(0));
        h[k] = Q(1);
        images.push_back(apply(harmonic_homology(ProjPlane<Q>(h), ProjPoint<Q>(h)), pt<Q>({1, 1, 1, 1})));
    }
    EXPECT_TRUE(same_point_set(images, {pt<Q>({-1, 1, 1, 1}), pt<Q>({1, -1, 1, 1}), pt<Q>({1, 1, -1, 1}),
                                        pt<Q>({1, 1, 1, -1})}));
}

TEST(Involutions, HarmonicHomologySquareIsScalar)
{
    std::mt19937 rng(3);
    for (int t = 0; t < 40; ++t) {
        auto c = random_point<Q>(rng);
        ProjPlane<Q> h(random_point<Q>(rng).coords());
        if (h.contains(c)) continue;
        auto m = harmonic_homology(h, c);
        auto m2 = m * m;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(m2(i, j), i == j ? m2(0, 0) : Q(0));
        // axis fixed pointwise, center fixed
        EXPECT_EQ(apply(m, c), c);
        auto ker = Matrix<Q>::from_rows({h.coeffs()}).kernel();
        for (const auto& v : ker) EXPECT_EQ(apply(m, ProjPoint<Q>(v)), ProjPoint<Q>(v));
    }
}

TEST(Involutions, EdgeInvolution)
{
    auto m = edge_involution<Q>({0, 1}, {2, 3});
    EXPECT_TRUE(proportional(std::vector<Q>{m(0, 0), m(1, 1), m(2, 2), m(3, 3)}, std::vector<Q>{1, 1, -1, -1}));
    EXPECT_THROW(edge_involution<Q>({0, 1}, {1, 2}), std::invalid_argument);
    EXPECT_THROW(edge_involution<Q>({0, 0}, {2, 3}), std::invalid_argument);
    std::vector<ProjPoint<Q>> images;
    for (auto [e, o] : {std::pair<CoordEdge, CoordEdge>{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}})
        images.push_back(apply(edge_involution<Q>(e, o), pt<Q>({1, 1, 1, 1})));
    EXPECT_TRUE(same_point_set(images, {pt<Q>({1, -1, -1, 1}), pt<Q>({1, -1, 1, -1}), pt<Q>({1, 1, -1, -1})}));
    // both edges fixed pointwise
    for (auto p : {pt<Q>({0, 0, 3, 5}), pt<Q>({2, 7, 0, 0})}) EXPECT_EQ(apply(m, p), p);
}

TEST(Desmic, FromUnitPoint)
{
    auto vs = make_vars({"x", "y", "z", "w"});
    auto t = desmic_from_point(pt<Q>({1, 1, 1, 1}), vs);
    EXPECT_TRUE(same_point_set(t.t1_vertices, {pt<Q>({1, 1, 1, 1}), pt<Q>({1, -1, -1, 1}), pt<Q>({1, -1, 1, -1}),
                                               pt<Q>({1, 1, -1, -1})}));
    EXPECT_TRUE(same_point_set(t.t2_vertices, {pt<Q>({-1, 1, 1, 1}), pt<Q>({1, -1, 1, 1}), pt<Q>({1, 1, -1, 1}),
                                               pt<Q>({1, 1, 1, -1})}));
    EXPECT_TRUE(t.pencil_dependent());

    using P = MultiPoly<Q>;
    P x = P::var(vs, "x"), y = P::var(vs, "y"), z = P::var(vs, "z"), w = P::var(vs, "w");
    P t1 = (x - y - z + w) * (x - y + z - w) * (x + y - z - w) * (x + y + z + w);
    P t2 = (-x + y + z + w) * (x - y + z + w) * (x + y - z + w) * (x + y + z - w);
    EXPECT_TRUE(verify_identity(Q(-16) * x * y * z * w + t1 + t2, P(0)));
    EXPECT_TRUE(proportionality(t.quartics[1], t1).has_value());
    EXPECT_TRUE(proportionality(t.quartics[2], t2).has_value());
}

TEST(Desmic, GeneralPointStaysInPencil)
{
    auto vs = make_vars({"x", "y", "z", "w"});
    auto t = desmic_from_point(pt<Q>({1, 2, 3, 5}), vs);
    // Oracle: P = D [1,1,1,1] with D = diag(1,2,3,5) commuting with all involutions,
    // so every quartic is the P = [1,1,1,1] quartic composed with D^-1.
    using P = MultiPoly<Q>;
    P x = P::var(vs, "x"), y = P::var(vs, "y"), z = P::var(vs, "z"), w = P::var(vs, "w");
    P t1 = (x - y - z + w) * (x - y + z - w) * (x + y - z - w) * (x + y + z + w);
    P t2 = (-x + y + z + w) * (x - y + z + w) * (x + y - z + w) * (x + y + z - w);
    std::vector<P> dinv = {x, Q(1, 2) * y, Q(1, 3) * z, Q(1, 5) * w};
    EXPECT_TRUE(proportionality(t.quartics[1], t1.subst(dinv)).has_value());
    EXPECT_TRUE(proportionality(t.quartics[2], t2.subst(dinv)).has_value());
    EXPECT_EQ(t.rank, 2u);
    EXPECT_THROW(desmic_from_point(pt<Q>({1, 1, 1, 0}), vs), std::invalid_argument);
}

TEST(PlaneFamilies, AlphaPlane)
{
    std::vector<std::vector<Q>> v456 = {{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}};
    EXPECT_TRUE(same_span(alpha_plane(pt<Q>({1, 0, 0, 0})), v456));
    EXPECT_EQ(alpha_plane(pt<Q>({0, 0, 0, 1})).size(), 3u);
    std::mt19937 rng(4);
    for (int t = 0; t < 40; ++t) {
        auto p = random_point<Q>(rng), q = random_point<Q>(rng);
        if (Matrix<Q>::from_rows({p.coords(), q.coords()}).rank() < 2) continue;
        auto forms = alpha_plane(p);
        ASSERT_EQ(forms.size(), 3u);
        EXPECT_TRUE(forms_vanish(forms, LineP3<Q>(p, q).plucker()));
    }
}

TEST(PlaneFamilies, BetaPlane)
{
    // lines in V(x+y): x1 = p12 = 0, x2 + x4 = p13 + p23 = 0, x3 + x5 = p14 + p24 = 0
    std::vector<std::vector<Q>> expect = {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 1, 0, 0}, {0, 0, 1, 0, 1, 0}};
    EXPECT_TRUE(same_span(beta_plane(ProjPlane<Q>{1, 1, 0, 0}), expect));
    std::mt19937 rng(5);
    for (int t = 0; t < 40; ++t) {
        ProjPlane<Q> h(random_point<Q>(rng).coords());
        auto ker = Matrix<Q>::from_rows({h.coeffs()}).kernel();
        LineP3<Q> l{ProjPoint<Q>(ker[0]), ProjPoint<Q>(ker[1])};
        auto forms = beta_plane(h);
        ASSERT_EQ(forms.size(), 3u);
        EXPECT_TRUE(forms_vanish(forms, l.plucker()));
    }
    EXPECT_TRUE(forms_vanish(beta_plane(ProjPlane<Q>{1, 1, 1, 1}),
                             LineP3<Q>(pt<Q>({1, -1, 0, 0}), pt<Q>({0, 0, 1, -1})).plucker()));
    EXPECT_THROW(beta_plane(ProjPlane<Q>{0, 0, 0, 0}), std::invalid_argument);
}
