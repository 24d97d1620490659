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

#include "desmic/arith/field.hpp"
#include "desmic/arith/int_matrix.hpp"
#include "desmic/arith/matrix.hpp"
#include "desmic/arith/multipoly.hpp"
#include "desmic/arith/poly_matrix.hpp"
#include "desmic/arith/power_series.hpp"
#include "desmic/arith/rational_function.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace desmic;

namespace {

template <class K>
K random_scalar(std::mt19937& rng)
{
    std::uniform_int_distribution<int> d(-3, 3);
    if constexpr (std::is_same_v<K, Gaussian>) return Gaussian(Rational(d(rng)), Rational(d(rng)));
    else if constexpr (std::is_same_v<K, F4>) return F4::element(d(rng) & 3);
    else return K(d(rng));
}

template <class K>
MultiPoly<K> random_poly(const VarSetPtr& vs, std::mt19937& rng, int terms = 4, int maxdeg = 2)
{
    std::uniform_int_distribution<int> e(0, maxdeg);
    MultiPoly<K> p = MultiPoly<K>::constant(vs, K(0));
    for (int t = 0; t < terms; ++t) {
        Exponent ex(vs->size());
        for (auto& x : ex) x = static_cast<std::uint16_t>(e(rng));
        p += MultiPoly<K>::monomial(vs, ex, random_scalar<K>(rng));
    }
    return p;
}

/// Gram matrix of a simply-laced Dynkin graph with -2 on the diagonal.
IntMatrix dynkin_gram(std::size_t n, const std::vector<std::pair<int, int>>& edges)
{
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = -2;
    for (auto [a, b] : edges) g(a, b) = g(b, a) = 1;
    return g;
}

IntMatrix e8_gram()
{
    return dynkin_gram(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}});
}

IntMatrix d8_gram()
{
    return dynkin_gram(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}});
}

}  // namespace

TEST(Scalars, RationalArithmetic)
{
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_EQ(*Rational(9, 4).sqrt(), Rational(3, 2));
    EXPECT_FALSE(Rational(2).sqrt().has_value());
}

TEST(Scalars, GaussianUnit)
{
    Gaussian i = imag_unit<Gaussian>();
    EXPECT_EQ(i * i, Gaussian(-1));
    EXPECT_EQ(Gaussian(1) / (Gaussian(1) + i), Gaussian(Rational(1, 2), Rational(-1, 2)));
    auto r = Gaussian(Rational(0), Rational(2)).sqrt();  // sqrt(2i) = 1 + i
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r * *r, Gaussian(Rational(0), Rational(2)));
    EXPECT_EQ((*Gaussian(-4).sqrt()) * (*Gaussian(-4).sqrt()), Gaussian(-4));
}

TEST(Scalars, PrimeFieldUnitIsSmallestRoot)
{
    EXPECT_EQ(imag_unit<Fp<13>>().value(), 5u);
    EXPECT_EQ(imag_unit<Fp<17>>().value(), 4u);
    EXPECT_EQ(imag_unit<Fp<29>>().value(), 12u);
    EXPECT_THROW(imag_unit<Fp<7>>(), std::domain_error);
    EXPECT_THROW(imag_unit<F4>(), std::domain_error);
    EXPECT_THROW(imag_unit<Rational>(), std::domain_error);
    EXPECT_EQ(Fp<13>(3) / Fp<13>(3), Fp<13>(1));
    EXPECT_EQ(Fp<13>(-1), Fp<13>(12));
}

TEST(Scalars, F4Relations)
{
    F4 w = F4::omega();
    EXPECT_EQ(w * w, w + F4(1));
    EXPECT_EQ(w * w * w, F4(1));
    for (int k = 1; k < 4; ++k) EXPECT_EQ(F4::element(k) * F4::element(k).inverse(), F4(1));
    EXPECT_EQ(F4(1) + F4(1), F4(0));
}

template <class K>
class RingAxioms : public ::testing::Test {};
using FieldTypes = ::testing::Types<Rational, Gaussian, Fp<13>, F2, F4>;
TYPED_TEST_SUITE(RingAxioms, FieldTypes);

TYPED_TEST(RingAxioms, CommutativeAssociativeDistributive)
{
    using K = TypeParam;
    auto vs = make_vars({"x", "y", "z"});
    std::mt19937 rng(20260417);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = random_poly<K>(vs, rng), b = random_poly<K>(vs, rng), c = random_poly<K>(vs, rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a.pow(3), a * a * a);
        // Leibniz rule holds formally in every characteristic.
        EXPECT_EQ((a * b).diff(0), a.diff(0) * b + a * b.diff(0));
    }
}

TYPED_TEST(RingAxioms, DivisionRecoversFactors)
{
    using K = TypeParam;
    auto vs = make_vars({"x", "y"});
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_poly<K>(vs, rng), b = random_poly<K>(vs, rng);
        if (b.is_zero()) continue;
        auto q = (a * b).exact_div(b);
        ASSERT_TRUE(q.has_value());
        EXPECT_EQ(*q, a);
        auto [qq, r] = (a * b + MultiPoly<K>(1)).divmod(b);
        EXPECT_EQ(qq * b + r, a * b + MultiPoly<K>(1));
    }
}

TEST(MultiPoly, NoZeroCoefficientsStored)
{
    auto vs = make_vars({"x", "y"});
    auto x = MultiPoly<Rational>::var(vs, "x");
    auto p = x + x - Rational(2) * x;
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.size(), 0u);
}

TEST(MultiPoly, SubstitutionExamples)
{
    auto src = make_vars({"x", "y"});
    auto dst = make_vars({"u", "v"});
    using P = MultiPoly<Rational>;
    P f = P::var(src, "x") + P::var(src, "y");
    P u = P::var(dst, "u"), v = P::var(dst, "v");
    EXPECT_EQ(poly_subst(f, {u * u, v}), u * u + v);
    EXPECT_THROW(poly_subst(f, {u}), std::invalid_argument);
    auto other = make_vars({"s"});
    EXPECT_THROW(poly_subst(f, {u, P::var(other, "s")}), std::invalid_argument);
    EXPECT_THROW(f + u, std::invalid_argument);
}

TEST(MultiPoly, EightSquaresIdentity)
{
    auto vs = make_vars({"x", "y", "z", "w"});
    using P = MultiPoly<Rational>;
    P x = P::var(vs, "x"), y = P::var(vs, "y"), z = P::var(vs, "z"), w = P::var(vs, "w");
    std::vector<P> forms = {x - y - z - w, x - y + z + w, x + y - z + w, x + y + z - w,
                            x - y - z + w, x - y + z - w, x + y - z - w, x + y + z + w};
    P sum(0);
    for (const auto& l : forms) sum += l * l;
    EXPECT_TRUE(verify_identity(sum, Rational(8) * (x * x + y * y + z * z + w * w)));
}

TEST(MultiPoly, PseudoRemainder)
{
    auto vs = make_vars({"t", "a"});
    using P = MultiPoly<Rational>;
    P t = P::var(vs, "t"), a = P::var(vs, "a");
    P g = a * t * t - P(1);         // a t^2 = 1
    P f = a * a * t.pow(4) - P(1);  // vanishes modulo g
    EXPECT_TRUE(pseudo_remainder(f, g, 0).is_zero());
    EXPECT_FALSE(pseudo_remainder(t, g, 0).is_zero());
}

TEST(MultiPoly, CoefficientMapping)
{
    auto vs = make_vars({"x"});
    using P = MultiPoly<Rational>;
    P f = Rational(3) * P::var(vs, "x") + P(2);
    auto g = f.map_coeffs<F2>([](const Rational& r) { return F2(r.num().get_si()); });
    EXPECT_EQ(g, MultiPoly<F2>::var(vs, "x"));
}

TEST(PolyMatrix, SmallDeterminants)
{
    auto vs = make_vars({"x", "y", "z", "w"});
    using P = MultiPoly<Rational>;
    P x = P::var(vs, "x"), y = P::var(vs, "y"), z = P::var(vs, "z"), w = P::var(vs, "w");
    EXPECT_EQ(det_poly_matrix<Rational>({{x}}), x);
    EXPECT_EQ(det_poly_matrix<Rational>({{x, y}, {z, w}}), x * w - y * z);
    EXPECT_THROW(det_poly_matrix<Rational>({{x, y}}), std::invalid_argument);
}

TEST(PolyMatrix, BareissMatchesLaplace)
{
    auto vs = make_vars({"x", "y"});
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        PolyMatrix<Rational> m(4, std::vector<MultiPoly<Rational>>(4));
        for (auto& r : m)
            for (auto& e : r) e = random_poly<Rational>(vs, rng, 2, 1);
        m[1][0] = MultiPoly<Rational>(0);  // exercise pivoting paths
        m[0][0] = MultiPoly<Rational>(0);
        EXPECT_EQ(det_poly_matrix(m), det_laplace(m));
    }
}

template <class K>
void check_pfaffian_squares(std::uint32_t seed)
{
    auto vs = make_vars({"x", "y"});
    std::mt19937 rng(seed);
    for (std::size_t n : {2u, 4u, 6u}) {
        PolyMatrix<K> m(n, std::vector<MultiPoly<K>>(n, MultiPoly<K>(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                m[i][j] = random_poly<K>(vs, rng, 2, 1);
                m[j][i] = -m[i][j];
            }
        auto pf = pfaffian_poly_matrix(m);
        EXPECT_EQ(pf * pf, det_poly_matrix(m));
    }
}

TEST(PolyMatrix, PfaffianSquaresToDeterminant)
{
    check_pfaffian_squares<Rational>(3);
    check_pfaffian_squares<F2>(5);
    check_pfaffian_squares<Fp<13>>(8);
}

TEST(PolyMatrix, PfaffianPatterns)
{
    auto vs = make_vars({"a", "b", "c", "d", "e", "f"});
    using P = MultiPoly<Rational>;
    P a = P::var(vs, "a"), b = P::var(vs, "b"), c = P::var(vs, "c");
    P d = P::var(vs, "d"), e = P::var(vs, "e"), f = P::var(vs, "f");
    P z(0);
    PolyMatrix<Rational> m = {{z, a, b, c}, {-a, z, d, e}, {-b, -d, z, f}, {-c, -e, -f, z}};
    EXPECT_EQ(pfaffian_poly_matrix(m), a * f - b * e + c * d);
    EXPECT_EQ(pfaffian_poly_matrix<Rational>({{z, a}, {-a, z}}), a);
    EXPECT_THROW(pfaffian_poly_matrix<Rational>({{z, a, b}, {-a, z, c}, {-b, -c, z}}), std::invalid_argument);
    EXPECT_THROW(pfaffian_poly_matrix<Rational>({{a, a}, {-a, z}}), std::invalid_argument);
}

TEST(IntMatrix, SmithForms)
{
    auto sf = smith_normal_form(IntMatrix::identity(3));
    EXPECT_EQ(sf.D, IntMatrix::identity(3));

    IntMatrix a3 = dynkin_gram(3, {{0, 1}, {1, 2}});
    auto s3 = smith_normal_form(a3);
    ASSERT_EQ(s3.invariant_factors.size(), 3u);
    EXPECT_EQ(s3.invariant_factors[0], 1);
    EXPECT_EQ(s3.invariant_factors[1], 1);
    EXPECT_EQ(s3.invariant_factors[2], 4);
    EXPECT_EQ(s3.U * a3 * s3.V, s3.D);

    auto s8 = smith_normal_form(d8_gram());
    ASSERT_EQ(s8.invariant_factors.size(), 8u);
    for (int k = 0; k < 6; ++k) EXPECT_EQ(s8.invariant_factors[k], 1);
    EXPECT_EQ(s8.invariant_factors[6], 2);
    EXPECT_EQ(s8.invariant_factors[7], 2);
}

TEST(IntMatrix, SmithTransformsUnimodularAndStable)
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix m(4, 5);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 5; ++j) m(i, j) = d(rng);
        auto sf = smith_normal_form(m);
        EXPECT_EQ(sf.U * m * sf.V, sf.D);
        EXPECT_EQ(abs(sf.U.det()), 1);
        EXPECT_EQ(abs(sf.V.det()), 1);
        for (std::size_t k = 1; k < sf.invariant_factors.size(); ++k)
            EXPECT_EQ(sf.invariant_factors[k] % sf.invariant_factors[k - 1], 0);
        // multiply by random elementary unimodular matrices; invariants must not change
        IntMatrix S = IntMatrix::identity(4);
        S.add_row(0, 2, d(rng));
        S.add_row(3, 1, d(rng));
        EXPECT_EQ(smith_normal_form(S * m).invariant_factors, sf.invariant_factors);
    }
}

TEST(IntMatrix, Inertia)
{
    EXPECT_EQ(inertia_signature(IntMatrix{{0, 1}, {1, 0}}), std::make_tuple(1, 0, 1));
    EXPECT_EQ(inertia_signature(e8_gram()), std::make_tuple(0, 0, 8));
    EXPECT_EQ(e8_gram().det(), 1);
    EXPECT_EQ(d8_gram().det(), 4);
    EXPECT_THROW(inertia_signature(IntMatrix{{0, 1}, {2, 0}}), std::invalid_argument);
}

TEST(IntMatrix, InertiaInvariantUnderCongruence)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-2, 2);
    IntMatrix g(4, 4);
    g(0, 1) = g(1, 0) = 1;
    g(2, 2) = -2;
    g(3, 3) = 0;
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix S = IntMatrix::identity(4);
        for (int k = 0; k < 5; ++k) {
            std::size_t a = rng() % 4, b = rng() % 4;
            if (a != b) S.add_row(a, b, d(rng));
        }
        EXPECT_EQ(inertia_signature(S.transpose() * g * S), std::make_tuple(1, 1, 2));
    }
}

TEST(IntMatrix, HermiteBasis)
{
    IntMatrix m{{2, 0}, {0, 2}, {1, 1}};
    auto b = row_hnf_basis(m);
    ASSERT_EQ(b.rows(), 2u);
    EXPECT_EQ(abs(b.det()), 2);
}

TEST(Matrix, KernelAndSolve)
{
    Matrix<Rational> m{{1, 2, 3}, {2, 4, 6}};
    EXPECT_EQ(m.rank(), 1u);
    auto k = m.kernel();
    ASSERT_EQ(k.size(), 2u);
    for (const auto& v : k)
        for (auto x : m * v) EXPECT_TRUE(x.is_zero());
    auto s = m.solve({Rational(1), Rational(2)});
    ASSERT_TRUE(s.has_value());
    EXPECT_FALSE(m.solve({Rational(1), Rational(3)}).has_value());
}

TEST(PowerSeries, TruncationAndComposition)
{
    auto vs = make_vars({"u", "v"});
    using S = PowerSeriesTrunc<Rational>;
    S u = S::var(vs, 0, 4), v = S::var(vs, 1, 4);
    S f = u * u * u * u * u;  // degree 5 vanishes at truncation 4
    EXPECT_TRUE(f.is_zero());
    S g = u * v + v * v * v;
    S h = g.compose({u + v * v, v});
    S expect = u * v + v * v * v + v * v * v;
    EXPECT_EQ(h, expect);
    EXPECT_THROW(g.compose({u + S(MultiPoly<Rational>::constant(vs, Rational(1)), 4), v}), std::invalid_argument);
}

TEST(RationalFunctions, FieldOperations)
{
    auto vs = make_vars({"a", "b"});
    using P = MultiPoly<Rational>;
    using RF = RationalFunction<Rational>;
    P a = P::var(vs, "a"), b = P::var(vs, "b");
    RF x(a, b), y(b, a);
    EXPECT_EQ(x * y, RF(1));
    EXPECT_EQ(x + y, RF(a * a + b * b, a * b));
    EXPECT_EQ(RF(a * a - b * b, a - b), RF(a + b));
    EXPECT_THROW(RF(a, P(0)), std::domain_error);
}
