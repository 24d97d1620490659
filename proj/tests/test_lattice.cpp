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

#include "desmic/config/curve_system.hpp"
#include "desmic/config/sylvester.hpp"
#include "desmic/lattice/artin.hpp"
#include "desmic/lattice/dynkin.hpp"
#include "desmic/lattice/lattice.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

using namespace desmic;

namespace {

std::string data_file(const std::string& name) { return std::string(DESMIC_DATA_DIR) + "/" + name; }

using Rows = std::vector<std::vector<long long>>;

Rows rows_of(const IntMatrix& m)
{
    Rows r(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j).get_si();
    return r;
}

// Oracle: fraction-free Gaussian elimination in 128-bit integers.
long long oracle_det(Rows a)
{
    const std::size_t n = a.size();
    std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return static_cast<long long>(sign * m[n - 1][n - 1]);
}

Rows oracle_mul(const Rows& a, const Rows& b)
{
    Rows c(a.size(), std::vector<long long>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

Rows oracle_transpose(const Rows& a)
{
    Rows t(a[0].size(), std::vector<long long>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

// Oracle: number of vectors of each norm <= bound for a positive definite ternary, by a box
// search with |x_i| <= sqrt(bound * (A^-1)_ii).
std::map<long long, long> oracle_theta3(const Rows& a, long long bound)
{
    long long det = oracle_det(a);
    long long adj[3];
    for (int i = 0; i < 3; ++i) {
        int p = (i + 1) % 3, q = (i + 2) % 3;
        adj[i] = a[p][p] * a[q][q] - a[p][q] * a[q][p];
    }
    long r[3];
    for (int i = 0; i < 3; ++i) r[i] = static_cast<long>(std::floor(std::sqrt(double(bound) * double(adj[i]) / double(det)))) + 1;
    std::map<long long, long> theta;
    for (long x = -r[0]; x <= r[0]; ++x)
        for (long y = -r[1]; y <= r[1]; ++y)
            for (long z = -r[2]; z <= r[2]; ++z) {
                long v[3] = {x, y, z};
                long long n = 0;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) n += v[i] * a[i][j] * v[j];
                if (n > 0 && n <= bound) ++theta[n];
            }
    return theta;
}

// Oracle: quadratic value of x directly from the generator values.
Rational oracle_q(const FiniteQuadForm& f, const std::vector<long>& x)
{
    Rational s;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) s += Rational(x[i] * x[j]) * f.values()(i, j);
    mpz_class num = s.num(), den = s.den() * 2, fl;
    mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return s - Rational(fl * 2, mpz_class(1));
}

long count_isotropic(const FiniteQuadForm& f)
{
    long n = 0;
    for (const auto& x : f.elements())
        if (oracle_q(f, x).is_zero()) ++n;
    return n;
}

// Checks an isometry witness: the induced map is a bijection preserving q.
bool witness_is_isometry(const FiniteQuadForm& a, const FiniteQuadForm& b, const std::vector<std::vector<long>>& images)
{
    std::set<std::vector<long>> seen;
    for (const auto& x : a.elements()) {
        std::vector<long> y(b.orders().size(), 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t c = 0; c < y.size(); ++c) y[c] = (y[c] + x[i] * images[i][c]) % b.orders()[c];
        if (!(oracle_q(a, x) == oracle_q(b, y))) return false;
        seen.insert(y);
    }
    return static_cast<long>(seen.size()) == a.group_order();
}

bool witness_is_lattice_isometry(const IntMatrix& t, const Lattice& a, const Lattice& b)
{
    Rows tr = rows_of(t);
    long long d = oracle_det(tr);
    return (d == 1 || d == -1) && oracle_mul(oracle_mul(tr, rows_of(b.gram())), oracle_transpose(tr)) == rows_of(a.gram());
}

Lattice L(const std::string& name) { return standard_lattice(name); }

}  // namespace

TEST(Lattice, StandardGramMatrices)
{
    EXPECT_EQ(L("U").gram(), (IntMatrix{{0, 1}, {1, 0}}));
    EXPECT_EQ(L("<-4>").gram(), (IntMatrix{{-4}}));
    EXPECT_EQ(L("A2").gram(), (IntMatrix{{-2, 1}, {1, -2}}));
    for (auto name : {"A1", "A3", "A7", "D4", "D5", "D8", "D9", "D12", "E6", "E7", "E8"}) {
        auto l = L(name);
        EXPECT_EQ(l.det(), static_cast<long>(oracle_det(rows_of(l.gram())))) << name;
        EXPECT_EQ(l.signature(), std::make_pair(0, l.rank())) << name;
    }
    EXPECT_EQ(abs(L("D8").det()), 4);
    EXPECT_EQ(abs(L("D9").det()), 4);
    EXPECT_EQ(L("E8").det(), 1);
    EXPECT_THROW(L("F4"), std::invalid_argument);
    EXPECT_THROW(L("D3"), std::invalid_argument);
    EXPECT_THROW(L("<x>"), std::invalid_argument);
    EXPECT_THROW(Lattice("bad", IntMatrix{{1}}), std::invalid_argument);
}

TEST(Lattice, Rescaling)
{
    EXPECT_EQ(rescale(L("U"), 2).gram(), (IntMatrix{{0, 2}, {2, 0}}));
    EXPECT_EQ(rescale(L("A2"), 2).gram(), (IntMatrix{{-4, 2}, {2, -4}}));
    EXPECT_EQ(rescale(L("A2"), 2).det(), 12);
}

TEST(Lattice, DiscriminantFormsOfRootLattices)
{
    EXPECT_TRUE(fq_isometric(disc_form(L("D4")), FiniteQuadForm::v_plus(1)));
    EXPECT_TRUE(fq_isometric(disc_form(L("D8")), FiniteQuadForm::u_plus(1)));
    EXPECT_FALSE(fq_isometric(disc_form(L("D4")), FiniteQuadForm::u_plus(1)));
    auto q = disc_form(L("<-4>"));
    ASSERT_EQ(q.orders(), std::vector<long>{4});
    // dual generator e/4 has square (1/4)^2 (-4) = -1/4
    Rational expected = Rational(1, 4) * Rational(1, 4) * Rational(-4) + Rational(2);
    EXPECT_EQ(q.values()(0, 0), expected);
    EXPECT_TRUE(fq_isometric(q, FiniteQuadForm::q_theta(-1, 2)));
    EXPECT_EQ(disc_form(L("E8")).group_order(), 1);
    EXPECT_THROW(disc_form(Lattice("deg", IntMatrix{{2, 2}, {2, 2}})), std::invalid_argument);
}

TEST(Lattice, FiniteFormIsometries)
{
    auto u = FiniteQuadForm::u_plus(1), v = FiniteQuadForm::v_plus(1);
    auto uu = direct_sum(u, u), vv = direct_sum(v, v);
    auto w = fq_isometry(uu, vv);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(witness_is_isometry(uu, vv, *w));

    auto a = direct_sum(FiniteQuadForm::q_theta(1, 2), v), b = direct_sum(FiniteQuadForm::q_theta(5, 2), u);
    auto w2 = fq_isometry(a, b);
    ASSERT_TRUE(w2.has_value());
    EXPECT_TRUE(witness_is_isometry(a, b, *w2));

    // u has three isotropic elements, v only the identity
    EXPECT_EQ(count_isotropic(u), 3);
    EXPECT_EQ(count_isotropic(v), 1);
    EXPECT_FALSE(fq_isometric(u, v));

    auto big = direct_sum(direct_sum(uu, uu), direct_sum(u, FiniteQuadForm::q_theta(1, 2)));
    EXPECT_THROW(fq_isometric(big, big), std::length_error);
    EXPECT_THROW(FiniteQuadForm::cyclic(2, Rational(1, 4)), std::invalid_argument);
}

TEST(Lattice, DiscFormOfSumIsSumOfDiscForms)
{
    const std::vector<std::string> names{"A1", "A2", "A3", "D4", "D5", "D6", "E6", "E7", "<-4>", "<4>", "U"};
    std::mt19937 rng(20261017);
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = L(names[pick(rng)]), b = L(names[pick(rng)]);
        auto s = direct_sum(a, b);
        auto lhs = disc_form(s), rhs = direct_sum(disc_form(a), disc_form(b));
        if (lhs.group_order() == 1) {
            EXPECT_EQ(rhs.group_order(), 1);
            continue;
        }
        EXPECT_TRUE(fq_isometric(lhs, rhs)) << s.name();
    }
}

TEST(Lattice, DeterminantIsDiscriminantGroupOrder)
{
    std::vector<Lattice> ls{L("D8"), L("D9"), L("E7"), curve_lattice_l(), supersingular_picard_lattice(1),
                            supersingular_picard_lattice(2), supersingular_picard_lattice(3),
                            direct_sum(rescale(L("U"), 2), L("<4>"))};
    for (const auto& l : ls) EXPECT_EQ(abs(l.det()), disc_form(l).group_order()) << l.name();
}

TEST(Lattice, GenusMatch)
{
    auto a = direct_sum({L("U"), L("D8"), L("D9")});
    auto v = genus_match_indefinite(a, curve_lattice_l());
    EXPECT_TRUE(v.match);
    EXPECT_EQ(v.signature1, std::make_pair(1, 18));
    EXPECT_EQ(v.disc_order1, 16);
    EXPECT_EQ(v.note, "isomorphic by Nikulin uniqueness (cited)");

    auto no = genus_match_indefinite(direct_sum({L("U"), L("D8"), L("D12")}), direct_sum({L("U"), L("E8"), L("D12")}));
    EXPECT_FALSE(no.match);
    EXPECT_NE(no.disc_order1, no.disc_order2);
    EXPECT_TRUE(genus_match_indefinite(curve_lattice_l(), curve_lattice_l()).match);
}

TEST(Lattice, TwentyEightCurveSpan)
{
    auto cs = load_curve_system(data_file("kummer-char0.json"));
    ASSERT_EQ(cs.size(), 28);
    auto s = lattice_from_curves(cs);
    EXPECT_EQ(s.rank, 19);
    EXPECT_EQ(s.signature, std::make_pair(1, 18));
    EXPECT_EQ(s.disc_order, 16);
    EXPECT_EQ(s.rank, static_cast<int>(IntMatrix::from_rows([&] {
                  std::vector<std::vector<mpz_class>> r;
                  for (const auto& row : cs.matrix()) {
                      r.emplace_back();
                      for (long long x : row) r.back().emplace_back(static_cast<long>(x));
                  }
                  return r;
              }()).rank()));
    EXPECT_TRUE(fq_isometric(disc_form(s.lattice), disc_form(curve_lattice_l())));

    auto single = lattice_from_curves(cs, {"E00"});
    EXPECT_EQ(single.rank, 1);
    EXPECT_EQ(single.invariant_factors, std::vector<mpz_class>{2});
}

TEST(Lattice, SupersingularSpans)
{
    auto cs = supersingular_curve_system();
    auto d = extract_desmic_28(cs);
    auto s = lattice_from_curves(d.curves);
    EXPECT_EQ(s.rank, 19);
    EXPECT_EQ(s.disc_order, 16);
    auto all = lattice_from_curves(cs);
    EXPECT_EQ(all.rank, 22);
    EXPECT_EQ(all.signature, std::make_pair(1, 21));
    EXPECT_TRUE(fq_isometric(disc_form(all.lattice), disc_form(supersingular_picard_lattice(1))));
}

TEST(Lattice, AffineD8FibrationSubsystem)
{
    auto cs = load_curve_system(data_file("kummer-char0.json"));
    std::vector<std::string> ids;
    for (const auto& c : cs.fibration("g").fibers.at(0).components) ids.push_back(cs.id(c.curve));
    ASSERT_EQ(ids.size(), 9u);
    EXPECT_EQ(classify_dynkin(cs, ids), "D~8");
    std::vector<std::string> d4{"E20", "E2", "E22", "E23"}, d5{"D3", "E30", "E3", "E32", "E33"};
    EXPECT_EQ(classify_dynkin(cs, d4), "D4");
    EXPECT_EQ(classify_dynkin(cs, d5), "D5");
    ids.push_back("E^2");
    ids.insert(ids.end(), d4.begin(), d4.end());
    ids.insert(ids.end(), d5.begin(), d5.end());
    auto s = lattice_from_curves(cs, ids);
    auto target = direct_sum({L("U"), L("D8"), L("D5"), L("D4")});
    EXPECT_EQ(s.rank, 19);
    EXPECT_EQ(s.disc_order, abs(target.det()));
    EXPECT_TRUE(genus_match_indefinite(s.lattice, target).match);
    ids.push_back("E^3");
    EXPECT_EQ(lattice_from_curves(cs, ids).disc_order, 16);
}

TEST(Lattice, DivisorPairings)
{
    auto cs = load_curve_system(data_file("kummer-char0.json"));
    auto h = divisor_pairings(cs, "H");
    EXPECT_EQ(h.square, Rational(4));
    for (const auto& [id, p] : h.with_curves) {
        bool sixteen = id.size() == 3 && id[0] == 'E' && id[1] != '^';
        EXPECT_EQ(p, Rational(sixteen ? 1 : 0)) << id;
    }
    EXPECT_EQ(divisor_pairings(cs, "H_node_pair").square, Rational(4));

    cs.divisors().push_back(Divisor{"half", {DivisorTerm{"E00", false, Rational(1, 2)}}});
    EXPECT_THROW(divisor_pairings(cs, "half"), std::domain_error);
    EXPECT_THROW(divisor_pairings(cs, "missing"), std::out_of_range);
}

TEST(Lattice, DivisorPairingsInvariantUnderRelabelingAndRadical)
{
    auto cs = load_curve_system(data_file("kummer-char0.json"));
    auto base = divisor_pairings(cs, "H");

    // reversed curve order
    CurveSystem rev;
    const int n = cs.size();
    for (int k = n - 1; k >= 0; --k) rev.add_curve(cs.id(k), cs(k, k));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) rev.set_intersection(cs.id(a), cs.id(b), cs(a, b));
    for (auto f : cs.fibrations()) {
        for (auto& fib : f.fibers)
            for (auto& c : fib.components) c.curve = rev.index(cs.id(c.curve));
        rev.fibrations().push_back(f);
    }
    for (const auto& d : cs.divisors()) rev.divisors().push_back(d);
    auto r = divisor_pairings(rev, "H");
    EXPECT_EQ(r.square, base.square);
    std::map<std::string, Rational> m(r.with_curves.begin(), r.with_curves.end());
    for (const auto& [id, p] : base.with_curves) EXPECT_EQ(m.at(id), p) << id;

    // adding radical vectors changes nothing
    Matrix<Rational> g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = Rational(cs(i, j));
    auto ker = g.kernel();
    ASSERT_EQ(ker.size(), 9u);
    auto h = cs.divisor_vector("H");
    for (const auto& k : ker) {
        auto v = h;
        for (int i = 0; i < n; ++i) v[i] += k[i];
        EXPECT_EQ(cs.pair(v, v), base.square);
        for (int c = 0; c < n; ++c) EXPECT_EQ(cs.pair_curve(v, c), base.with_curves[c].second);
    }
}

TEST(Lattice, DynkinOfFibers)
{
    auto cs = supersingular_curve_system();
    std::vector<std::string> ids;
    for (const auto& c : cs.fibration("f1").fibers.at(0).components) ids.push_back(cs.id(c.curve));
    EXPECT_EQ(classify_dynkin(cs, ids), "D~4");
}

TEST(Lattice, OverlatticeChainOverD5A3)
{
    auto c = d5_a3_chain();
    EXPECT_TRUE(c.chain);
    EXPECT_EQ(c.d8.index, 2);
    EXPECT_EQ(c.e8.index, 4);
    EXPECT_EQ(oracle_det(rows_of(c.e8.lattice.gram())), 1);
    EXPECT_EQ(oracle_det(rows_of(c.d8.lattice.gram())), 4);
    ASSERT_TRUE(c.e8_iso.has_value());
    ASSERT_TRUE(c.d8_iso.has_value());
    EXPECT_TRUE(witness_is_lattice_isometry(*c.e8_iso, c.e8.lattice, L("E8")));
    EXPECT_TRUE(witness_is_lattice_isometry(*c.d8_iso, c.d8.lattice, L("D8")));
    EXPECT_EQ(root_count(c.e8.lattice), 240);
    EXPECT_EQ(root_count(c.d8.lattice), 112);

    auto same = overlattice(c.base, {});
    EXPECT_EQ(same.lattice.gram(), c.base.gram());
    EXPECT_EQ(same.index, 1);

    // the order-4 generator of D5^*/D5 alone has square -5/4: not isotropic
    auto qd = disc_form(L("D5"));
    std::vector<Rational> bad(qd.generators[0]);
    bad.resize(8);
    EXPECT_THROW(overlattice(c.base, {bad}), std::invalid_argument);
}

TEST(Lattice, Artin2Verdicts)
{
    auto r1 = artin2_check(1), r2 = artin2_check(2), r3 = artin2_check(3);
    EXPECT_TRUE(r1.embeddable);
    EXPECT_TRUE(r2.embeddable);
    EXPECT_FALSE(r3.embeddable);
    for (const auto* r : {&r1, &r2, &r3}) {
        EXPECT_EQ(r->picard_signature, std::make_pair(1, 21));
        EXPECT_EQ(r->picard_disc_order, 1L << (2 * r->sigma));
        EXPECT_EQ(r->l_of_l, 3);
        EXPECT_EQ(r->l_of_s, 2 * r->sigma);
        EXPECT_EQ(r->l_of_m_lower, 2 * r->sigma - 3);
        EXPECT_TRUE(r->length_bound_allows);
    }
    EXPECT_EQ(r3.matches, 0);
    EXPECT_FALSE(r3.enumeration.classes.empty());
    EXPECT_THROW(artin2_check(4), std::invalid_argument);
}

TEST(Lattice, PicardDiscriminantForms)
{
    auto u = FiniteQuadForm::u_plus(1), v = FiniteQuadForm::v_plus(1);
    EXPECT_TRUE(fq_isometric(disc_form(curve_lattice_l()), direct_sum(u, FiniteQuadForm::q_theta(-1, 2))));
    EXPECT_TRUE(fq_isometric(disc_form(supersingular_picard_lattice(3)), direct_sum(direct_sum(u, u), v)));
    // the transcendental lattice U(2) + <4> has the opposite discriminant form
    Lattice t("T", direct_sum(rescale(L("U"), 2), L("<4>")).gram());
    EXPECT_EQ(t.signature(), std::make_pair(2, 1));
    EXPECT_TRUE(fq_isometric(disc_form(t), disc_form(curve_lattice_l()).negated()));
}

TEST(Lattice, CmPicardLattices)
{
    auto a = direct_sum({L("U"), L("E8"), L("E8"), L("<-4>"), L("<-4>")});
    auto b = direct_sum({L("U"), L("E8"), L("E8"), rescale(L("A2"), 2)});
    EXPECT_EQ(a.rank(), 20);
    EXPECT_EQ(b.rank(), 20);
    EXPECT_EQ(a.signature(), std::make_pair(1, 19));
    EXPECT_EQ(b.signature(), std::make_pair(1, 19));
    EXPECT_EQ(abs(a.det()), 16);
    EXPECT_EQ(abs(b.det()), 12);
}

TEST(Lattice, TernaryEnumerationIsComplete)
{
    // oracle: every even positive definite ternary of determinant 16 in a wide box has the theta
    // series of one of the enumerated classes
    auto e = enumerate_even_ternaries(16);
    std::set<std::map<long long, long>> classes;
    for (const auto& g : e.classes) classes.insert(oracle_theta3(rows_of(g), 12));
    EXPECT_EQ(classes.size(), e.classes.size());
    long seen = 0;
    for (long a = 2; a <= 16; a += 2)
        for (long b = 2; b <= 16; b += 2)
            for (long c = 2; c <= 16; c += 2)
                for (long f = -4; f <= 4; ++f)
                    for (long g = -4; g <= 4; ++g)
                        for (long h = -4; h <= 4; ++h) {
                            Rows m{{a, f, g}, {f, b, h}, {g, h, c}};
                            if (a * b - f * f <= 0 || oracle_det(m) != 16) continue;
                            ++seen;
                            EXPECT_TRUE(classes.count(oracle_theta3(m, 12))) << a << b << c << f << g << h;
                        }
    EXPECT_GT(seen, 0);

    auto four = enumerate_even_ternaries(4);
    ASSERT_EQ(four.classes.size(), 1u);
    EXPECT_TRUE(definite_isometric(Lattice("T", four.classes[0]), Lattice("A3+", negated(L("A3").gram()))));
}
