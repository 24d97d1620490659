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

#ifndef DESMIC_LATTICE_ARTIN_HPP
#define DESMIC_LATTICE_ARTIN_HPP

#include <array>
#include <string>
#include <vector>

#include "desmic/lattice/lattice.hpp"

namespace desmic {

/// Isometry of two definite lattices of equal rank by backtracking over vectors of the right norms.
/// Row i of the result is the image of the i-th basis vector of a, in the basis of b.
inline std::optional<IntMatrix> definite_isometry(const Lattice& a, const Lattice& b)
{
    const int n = a.rank();
    if (b.rank() != n || a.det() != b.det() || a.signature() != b.signature()) return std::nullopt;
    long bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(a.gram()(i, i).get_si()));
    std::vector<std::vector<mpz_class>> pool;
    for (const auto& x : short_vectors(b, bound)) {
        std::vector<mpz_class> v(x.begin(), x.end()), w;
        for (const auto& c : v) w.push_back(-c);
        pool.push_back(v);
        pool.push_back(w);
    }
    std::vector<std::size_t> img(n);
    IntMatrix t(n, n);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == n) {
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) t(r, c) = pool[img[r]][c];
            return abs(t.det()) == 1;
        }
        for (std::size_t k = 0; k < pool.size(); ++k) {
            if (b.norm(pool[k]) != a.gram()(i, i)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = b.pair(pool[k], pool[img[j]]) == a.gram()(i, j);
            if (!ok) continue;
            img[i] = k;
            if (self(self, i + 1)) return true;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return t;
}

inline bool definite_isometric(const Lattice& a, const Lattice& b) { return definite_isometry(a, b).has_value(); }

/// D5 + A3 inside D8 inside E8: glue g (order 4, isotropic) gives E8, 2g gives D8.
struct OverlatticeChain {
    Lattice base;
    std::vector<Rational> glue;
    Overlattice d8, e8;
    bool chain = false;                         // base within d8 within e8, as bases in base coordinates
    std::optional<IntMatrix> d8_iso, e8_iso;    // isometries onto standard_lattice("D8"), ("E8")
};

inline OverlatticeChain d5_a3_chain()
{
    OverlatticeChain c;
    Lattice d5 = standard_lattice("D5"), a3 = standard_lattice("A3");
    c.base = direct_sum(d5, a3);
    auto qd = disc_form(d5), qa = disc_form(a3);
    auto qsum = direct_sum(qd, qa);
    std::optional<std::vector<long>> pick;
    for (const auto& x : qsum.elements())
        if (qsum.element_order(x) == 4 && qsum.q(x).is_zero()) {
            pick = x;
            break;
        }
    if (!pick) throw std::logic_error("d5_a3_chain: no isotropic element of order 4");
    std::vector<Rational> g(8);
    for (int i = 0; i < 5; ++i) g[i] = Rational((*pick)[0]) * qd.generators[0][i];
    for (int i = 0; i < 3; ++i) g[5 + i] = Rational((*pick)[1]) * qa.generators[0][i];
    c.glue = g;
    std::vector<Rational> g2;
    for (const auto& x : g) g2.push_back(x * Rational(2));
    c.d8 = overlattice(c.base, {g2});
    c.e8 = overlattice(c.base, {g});
    c.chain = lattice_contains(c.d8.basis, Matrix<Rational>::identity(8)) && lattice_contains(c.e8.basis, c.d8.basis);
    c.d8_iso = definite_isometry(c.d8.lattice, standard_lattice("D8"));
    c.e8_iso = definite_isometry(c.e8.lattice, standard_lattice("E8"));
    return c;
}

struct TernaryEnumeration {
    long det = 0;
    long candidates = 0;                // reduced Gram matrices with the right determinant
    std::vector<IntMatrix> classes;     // one positive definite representative per isometry class
};

/// Even positive definite ternary forms of determinant det: 2 <= a <= b <= c even, abc <= 4 det,
/// |2 a_12| <= a, |2 a_13| <= a, |2 a_23| <= b; deduplicated up to isometry.
inline TernaryEnumeration enumerate_even_ternaries(long det)
{
    TernaryEnumeration out;
    out.det = det;
    const long cap = 4 * det;
    for (long a = 2; a * a * a <= cap; a += 2)
        for (long b = a; a * b * b <= cap; b += 2)
            for (long c = b; a * b * c <= cap; c += 2)
                for (long f = -a / 2; f <= a / 2; ++f)
                    for (long e = -a / 2; e <= a / 2; ++e)
                        for (long d = -b / 2; d <= b / 2; ++d) {
                            IntMatrix g{{a, f, e}, {f, b, d}, {e, d, c}};
                            if (g.det() != det) continue;
                            if (a * b - f * f <= 0) continue;
                            ++out.candidates;
                            Lattice l("T", g);
                            bool seen = false;
                            for (const auto& h : out.classes)
                                if (definite_isometric(Lattice("T", h), l)) {
                                    seen = true;
                                    break;
                                }
                            if (!seen) out.classes.push_back(g);
                        }
    return out;
}

inline IntMatrix negated(const IntMatrix& m)
{
    IntMatrix r = m;
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = -r(i, j);
    return r;
}

/// U + E8 + D8 + <-4>, the lattice spanned by the 28 curves.
inline Lattice curve_lattice_l()
{
    return direct_sum({standard_lattice("U"), standard_lattice("E8"), standard_lattice("D8"), standard_lattice("<-4>")});
}

/// Picard lattice of the supersingular K3 surface in characteristic two with Artin invariant sigma.
inline Lattice supersingular_picard_lattice(int sigma)
{
    switch (sigma) {
    case 1: return direct_sum({standard_lattice("U"), standard_lattice("E8"), standard_lattice("D12")});
    case 2: return direct_sum({standard_lattice("U"), standard_lattice("E8"), standard_lattice("D8"), standard_lattice("D4")});
    case 3:
        return direct_sum({standard_lattice("U"), standard_lattice("E8"), standard_lattice("D4"), standard_lattice("D4"),
                           standard_lattice("D4")});
    default: throw std::invalid_argument("supersingular_picard_lattice: sigma must be 1, 2 or 3");
    }
}

struct Artin2Result {
    int sigma = 0;
    bool embeddable = false;
    std::string witness;
    // l(L) + l(M) >= l(S) with rank M = 3
    int l_of_l = 0, l_of_s = 0, l_of_m_lower = 0, l_of_m_upper = 3;
    bool length_bound_allows = false;
    std::pair<int, int> picard_signature;
    long picard_disc_order = 0;
    TernaryEnumeration enumeration;  // sigma = 3 only
    long matches = 0;
};

namespace detail {

/// D_n coordinates of x (a vector of Z^n with even sum) in the simple-root basis of standard_lattice("D<n>").
inline std::vector<mpz_class> dn_coords(int n, const std::vector<long>& x)
{
    auto c = integral_coordinates(dn_root_rows(n), x);
    if (!c) throw std::logic_error("dn_coords: vector not in D_n");
    return *c;
}

/// Rows: images of U + E8 + D8 + <-4> inside U + E8 + D_{8+k} + rest, where D8 sits on the first
/// eight coordinates of D_{8+k} and <-4> maps to the all-ones vector of a D4 block at offset.
inline IntMatrix embedding_matrix(int s_rank, int dn, int dn_offset, int ones_block_n, int ones_offset, int ones_start)
{
    IntMatrix b(19, s_rank);
    for (int i = 0; i < 10; ++i) b(i, i) = 1;  // U + E8 identically
    auto d8 = dn_root_rows(8);
    for (int k = 0; k < 8; ++k) {
        std::vector<long> x(dn, 0);
        for (int j = 0; j < 8; ++j) x[j] = d8[k][j];
        auto c = dn_coords(dn, x);
        for (int j = 0; j < dn; ++j) b(10 + k, dn_offset + j) = c[j];
    }
    std::vector<long> ones(ones_block_n, 0);
    for (int j = ones_start; j < ones_start + 4; ++j) ones[j] = 1;
    auto c = dn_coords(ones_block_n, ones);
    for (int j = 0; j < ones_block_n; ++j) b(18, ones_offset + j) = c[j];
    return b;
}

}  // namespace detail

/// Whether U + E8 + D8 + <-4> embeds primitively into the supersingular Picard lattice S_sigma.
inline Artin2Result artin2_check(int sigma)
{
    if (sigma < 1 || sigma > 3) throw std::invalid_argument("artin2_check: sigma must be 1, 2 or 3");
    Artin2Result r;
    r.sigma = sigma;
    Lattice l = curve_lattice_l();
    Lattice s = supersingular_picard_lattice(sigma);
    r.picard_signature = s.signature();
    r.picard_disc_order = mpz_class(abs(s.det())).get_si();
    r.l_of_l = disc_form(l).length();
    r.l_of_s = disc_form(s).length();
    r.l_of_m_lower = r.l_of_s - r.l_of_l;
    r.length_bound_allows = r.l_of_m_lower <= r.l_of_m_upper;
    if (sigma == 1) {
        auto b = detail::embedding_matrix(22, 12, 10, 12, 10, 8);
        auto chk = check_primitive_embedding(l, s, b);
        r.embeddable = chk.ok();
        r.witness = "U+E8+D12: D8 on coordinates 1..8 of D12, <-4> -> e9+e10+e11+e12";
    } else if (sigma == 2) {
        auto b = detail::embedding_matrix(22, 8, 10, 4, 18, 0);
        auto chk = check_primitive_embedding(l, s, b);
        r.embeddable = chk.ok();
        r.witness = "U+E8+D8+D4: D8 identically, <-4> -> e1+e2+e3+e4 in D4";
    } else {
        // the orthogonal complement M would be negative definite of rank 3, det -16, with
        // discriminant form q_1(2^2) + v_+(2)
        auto target = direct_sum(FiniteQuadForm::q_theta(1, 2), FiniteQuadForm::v_plus(1));
        r.enumeration = enumerate_even_ternaries(16);
        for (const auto& g : r.enumeration.classes)
            if (fq_isometric(disc_form(Lattice("M", negated(g))), target)) ++r.matches;
        r.embeddable = r.matches > 0;
        r.witness = r.embeddable ? "ternary complement found" : "no ternary complement";
    }
    return r;
}

}  // namespace desmic

#endif
