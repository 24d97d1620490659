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

#ifndef DESMIC_LATTICE_LATTICE_HPP
#define DESMIC_LATTICE_LATTICE_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "desmic/arith/int_matrix.hpp"
#include "desmic/arith/matrix.hpp"
#include "desmic/arith/rational.hpp"
#include "desmic/config/curve_system.hpp"
#include "desmic/lattice/dynkin.hpp"

namespace desmic {

/// Even integral lattice given by its Gram matrix. Root lattices are negative definite
/// (roots have square -2), so hyperbolic lattices have signature (1, n).
class Lattice {
public:
    Lattice() = default;
    Lattice(std::string name, IntMatrix gram) : name_(std::move(name)), gram_(std::move(gram))
    {
        if (gram_.rows() != gram_.cols() || !gram_.is_symmetric())
            throw std::invalid_argument("Lattice " + name_ + ": Gram matrix is not symmetric");
        for (std::size_t i = 0; i < gram_.rows(); ++i)
            if (gram_(i, i) % 2 != 0) throw std::invalid_argument("Lattice " + name_ + ": odd diagonal entry");
    }

    const std::string& name() const noexcept { return name_; }
    const IntMatrix& gram() const noexcept { return gram_; }
    int rank() const noexcept { return static_cast<int>(gram_.rows()); }
    mpz_class det() const { return gram_.det(); }
    /// (n_plus, n_minus)
    std::pair<int, int> signature() const
    {
        auto [p, z, n] = inertia_signature(gram_);
        (void)z;
        return {p, n};
    }
    bool nondegenerate() const { return det() != 0; }

    mpz_class norm(const std::vector<mpz_class>& x) const { return pair(x, x); }
    mpz_class pair(const std::vector<mpz_class>& x, const std::vector<mpz_class>& y) const
    {
        mpz_class s = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * gram_(i, j) * y[j];
        return s;
    }

private:
    std::string name_;
    IntMatrix gram_;
};

inline Lattice direct_sum(const Lattice& a, const Lattice& b)
{
    const std::size_t n = a.gram().rows(), m = b.gram().rows();
    IntMatrix g(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
    return Lattice(a.name() + "+" + b.name(), g);
}

inline Lattice direct_sum(const std::vector<Lattice>& parts)
{
    if (parts.empty()) throw std::invalid_argument("direct_sum: no summands");
    Lattice s = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) s = direct_sum(s, parts[k]);
    return s;
}

/// L(m): the same group with the form multiplied by m.
inline Lattice rescale(const Lattice& l, long m)
{
    IntMatrix g = l.gram();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= m;
    return Lattice(l.name() + "(" + std::to_string(m) + ")", g);
}

/// "U", "A<n>", "D<n>", "E6", "E7", "E8" or "<k>" for the rank-one lattice of square k.
inline Lattice standard_lattice(const std::string& name)
{
    auto chain = [](int n) {
        IntMatrix g(n, n);
        for (int i = 0; i < n; ++i) {
            g(i, i) = -2;
            if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = 1;
        }
        return g;
    };
    auto number = [&](std::size_t from) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(name.substr(from), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("standard_lattice: unknown name " + name);
        }
        if (from + used != name.size()) throw std::invalid_argument("standard_lattice: unknown name " + name);
        return v;
    };
    if (name == "U") return Lattice("U", IntMatrix{{0, 1}, {1, 0}});
    if (name.size() >= 3 && name.front() == '<' && name.back() == '>') {
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(name.substr(1, name.size() - 2), &used);
            if (used != name.size() - 2) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("standard_lattice: unknown name " + name);
        }
        return Lattice(name, IntMatrix{{k}});
    }
    if (name.empty()) throw std::invalid_argument("standard_lattice: empty name");
    if (name[0] == 'A') {
        int n = number(1);
        if (n < 1) throw std::invalid_argument("standard_lattice: bad rank in " + name);
        return Lattice(name, chain(n));
    }
    if (name[0] == 'D') {
        int n = number(1);
        if (n < 4) throw std::invalid_argument("standard_lattice: D_n needs n >= 4");
        IntMatrix g = chain(n - 1);
        IntMatrix d(n, n);
        for (int i = 0; i + 1 < n; ++i)
            for (int j = 0; j + 1 < n; ++j) d(i, j) = g(i, j);
        d(n - 1, n - 1) = -2;
        d(n - 1, n - 3) = d(n - 3, n - 1) = 1;
        return Lattice(name, d);
    }
    if (name[0] == 'E') {
        int n = number(1);
        if (n < 6 || n > 8) throw std::invalid_argument("standard_lattice: E_n needs 6 <= n <= 8");
        IntMatrix g = chain(n - 1);
        IntMatrix e(n, n);
        for (int i = 0; i + 1 < n; ++i)
            for (int j = 0; j + 1 < n; ++j) e(i, j) = g(i, j);
        e(n - 1, n - 1) = -2;
        e(n - 1, 2) = e(2, n - 1) = 1;
        return Lattice(name, e);
    }
    throw std::invalid_argument("standard_lattice: unknown name " + name);
}

/// Simple roots of D_n as rows in Z^n (square form -x.x), matching standard_lattice("D<n>").
inline std::vector<std::vector<long>> dn_root_rows(int n)
{
    std::vector<std::vector<long>> r(n, std::vector<long>(n, 0));
    for (int k = 0; k + 1 < n; ++k) {
        r[k][k] = 1;
        r[k][k + 1] = -1;
    }
    r[n - 1][n - 2] = 1;
    r[n - 1][n - 1] = 1;
    return r;
}

/// Coefficients of x in the basis given by rows; nullopt when x is not an integral combination.
inline std::optional<std::vector<mpz_class>> integral_coordinates(const std::vector<std::vector<long>>& rows,
                                                                  const std::vector<long>& x)
{
    const std::size_t n = rows.size(), m = x.size();
    Matrix<Rational> t(m, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) t(j, i) = Rational(rows[i][j]);
    std::vector<Rational> b;
    for (long v : x) b.emplace_back(v);
    auto sol = t.solve(b);
    if (!sol) return std::nullopt;
    std::vector<mpz_class> out;
    for (const auto& c : *sol) {
        if (!c.is_integer()) return std::nullopt;
        out.push_back(c.num());
    }
    return out;
}

namespace detail {

inline Rational mod_rational(const Rational& r, long m)
{
    mpz_class den = r.den() * m, q;
    mpz_class num = r.num();
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r - Rational(q * m, mpz_class(1));
}

}  // namespace detail

/// Finite quadratic form on a finite abelian group written as a sum of cyclic groups Z/d_i.
/// b_ij is the value of the bilinear form on generators (mod 1), b_ii the quadratic value (mod 2).
class FiniteQuadForm {
public:
    FiniteQuadForm() = default;
    FiniteQuadForm(std::vector<long> orders, Matrix<Rational> b) : orders_(std::move(orders)), b_(std::move(b))
    {
        const std::size_t n = orders_.size();
        if (b_.rows() != n || b_.cols() != n) throw std::invalid_argument("FiniteQuadForm: size mismatch");
        for (std::size_t i = 0; i < n; ++i) {
            if (orders_[i] < 2) throw std::invalid_argument("FiniteQuadForm: trivial cyclic factor");
            for (std::size_t j = 0; j < n; ++j) {
                if (!(b_(i, j) == b_(j, i))) throw std::invalid_argument("FiniteQuadForm: asymmetric values");
                if (!(b_(i, j) * Rational(orders_[i])).is_integer())
                    throw std::invalid_argument("FiniteQuadForm: values inconsistent with the group relations");
            }
            if (!(detail::mod_rational(b_(i, i) * Rational(orders_[i] * orders_[i]), 2)).is_zero())
                throw std::invalid_argument("FiniteQuadForm: q(d g) != 0 mod 2");
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                b_(i, j) = i == j ? detail::mod_rational(b_(i, j), 2) : detail::mod_rational(b_(i, j), 1);
    }

    /// Z/d with generator value q.
    static FiniteQuadForm cyclic(long d, const Rational& q) { return FiniteQuadForm({d}, Matrix<Rational>{{q}}); }
    /// q_theta(2^k): Z/2^k with q = theta / 2^k.
    static FiniteQuadForm q_theta(long theta, int k) { return cyclic(1L << k, Rational(theta, 1L << k)); }
    /// u_+(2^k): (Z/2^k)^2, q = 0 on both generators, b = 1/2^k between them.
    static FiniteQuadForm u_plus(int k)
    {
        long d = 1L << k;
        return FiniteQuadForm({d, d}, Matrix<Rational>{{Rational(0), Rational(1, d)}, {Rational(1, d), Rational(0)}});
    }
    /// v_+(2^k): (Z/2^k)^2, q = 2^(1-k) on both generators, b = 1/2^k between them.
    static FiniteQuadForm v_plus(int k)
    {
        long d = 1L << k;
        return FiniteQuadForm({d, d}, Matrix<Rational>{{Rational(2, d), Rational(1, d)}, {Rational(1, d), Rational(2, d)}});
    }

    const std::vector<long>& orders() const noexcept { return orders_; }
    const Matrix<Rational>& values() const noexcept { return b_; }
    /// Number of cyclic factors in this presentation (the minimal number when it comes from disc_form).
    int length() const noexcept { return static_cast<int>(orders_.size()); }
    long group_order() const
    {
        long n = 1;
        for (long d : orders_) n *= d;
        return n;
    }

    /// Every element as its coefficient vector, in mixed-radix order.
    std::vector<std::vector<long>> elements() const
    {
        std::vector<std::vector<long>> out;
        std::vector<long> x(orders_.size(), 0);
        for (long k = 0; k < group_order(); ++k) {
            out.push_back(x);
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (++x[i] < orders_[i]) break;
                x[i] = 0;
            }
        }
        return out;
    }

    Rational q(const std::vector<long>& x) const
    {
        Rational s;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            s += Rational(x[i] * x[i]) * b_(i, i);
            for (std::size_t j = i + 1; j < x.size(); ++j)
                if (x[j] != 0) s += Rational(2 * x[i] * x[j]) * b_(i, j);
        }
        return detail::mod_rational(s, 2);
    }
    Rational b(const std::vector<long>& x, const std::vector<long>& y) const
    {
        Rational s;
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j)
                if (x[i] != 0 && y[j] != 0) s += Rational(x[i] * y[j]) * b_(i, j);
        return detail::mod_rational(s, 1);
    }
    long element_order(const std::vector<long>& x) const
    {
        long o = 1;
        for (std::size_t i = 0; i < x.size(); ++i) {
            long g = std::gcd(x[i], orders_[i]);
            o = std::lcm(o, orders_[i] / g);
        }
        return o;
    }

    FiniteQuadForm negated() const
    {
        Matrix<Rational> m = b_;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
        return FiniteQuadForm(orders_, m);
    }

    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < orders_.size(); ++i) s += (i ? "+" : "") + std::string("Z/") + std::to_string(orders_[i]);
        s += " q=[";
        for (std::size_t i = 0; i < orders_.size(); ++i) s += (i ? "," : "") + b_(i, i).str();
        return s + "]";
    }

    /// Generator coordinates in the lattice basis, when built by disc_form.
    std::vector<std::vector<Rational>> generators;

private:
    std::vector<long> orders_;
    Matrix<Rational> b_;
};

inline FiniteQuadForm direct_sum(const FiniteQuadForm& a, const FiniteQuadForm& b)
{
    const std::size_t n = a.orders().size(), m = b.orders().size();
    std::vector<long> orders = a.orders();
    orders.insert(orders.end(), b.orders().begin(), b.orders().end());
    Matrix<Rational> v(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v(i, j) = a.values()(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) v(n + i, n + j) = b.values()(i, j);
    return FiniteQuadForm(orders, v);
}

/// Discriminant form of L on L^* / L, from the Smith form U G V = D: the columns of V D^{-1}
/// with d_i > 1 generate the group.
inline FiniteQuadForm disc_form(const Lattice& l)
{
    if (!l.nondegenerate()) throw std::invalid_argument("disc_form: degenerate Gram matrix for " + l.name());
    auto sf = smith_normal_form(l.gram());
    const std::size_t n = l.gram().rows();
    std::vector<long> orders;
    std::vector<std::vector<Rational>> gens;
    for (std::size_t k = 0; k < n; ++k) {
        mpz_class d = abs(sf.D(k, k));
        if (d == 1) continue;
        if (!d.fits_slong_p()) throw std::overflow_error("disc_form: invariant factor too large");
        orders.push_back(d.get_si());
        std::vector<Rational> g(n);
        for (std::size_t i = 0; i < n; ++i) g[i] = Rational(sf.V(i, k), d);
        gens.push_back(g);
    }
    Matrix<Rational> b(orders.size(), orders.size());
    auto G = l.gram().to_rational();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            Rational s;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if (!gens[i][r].is_zero() && !gens[j][c].is_zero()) s += gens[i][r] * G(r, c) * gens[j][c];
            b(i, j) = s;
        }
    FiniteQuadForm q(orders, b);
    q.generators = gens;
    return q;
}

/// Images of the generators of a under an isometry a -> b, found by exhaustive search.
inline std::optional<std::vector<std::vector<long>>> fq_isometry(const FiniteQuadForm& a, const FiniteQuadForm& b,
                                                                 long max_order = 1024)
{
    if (a.group_order() != b.group_order()) return std::nullopt;
    if (a.group_order() > max_order) throw std::length_error("fq_isometric: group order above the search bound");
    auto eb = b.elements();
    // same abelian group: same number of elements of each order
    auto order_stats = [](const FiniteQuadForm& f, const std::vector<std::vector<long>>& els) {
        std::map<long, long> m;
        for (const auto& x : els) ++m[f.element_order(x)];
        return m;
    };
    if (order_stats(a, a.elements()) != order_stats(b, eb)) return std::nullopt;
    const std::size_t n = a.orders().size();
    std::vector<Rational> qb;
    std::vector<long> ob;
    for (const auto& y : eb) {
        qb.push_back(b.q(y));
        ob.push_back(b.element_order(y));
    }
    std::vector<std::size_t> img(n);
    auto unit = [&](std::size_t i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        return e;
    };
    auto bijective = [&]() {
        std::set<std::vector<long>> seen;
        for (const auto& x : a.elements()) {
            std::vector<long> y(b.orders().size(), 0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t c = 0; c < y.size(); ++c) y[c] = (y[c] + x[i] * eb[img[i]][c]) % b.orders()[c];
            seen.insert(y);
        }
        return static_cast<long>(seen.size()) == a.group_order();
    };
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) return bijective();
        auto ei = unit(i);
        Rational qi = a.q(ei);
        for (std::size_t k = 0; k < eb.size(); ++k) {
            if (ob[k] != a.orders()[i] || !(qb[k] == qi)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) ok = b.b(eb[k], eb[img[j]]) == a.b(ei, unit(j));
            if (!ok) continue;
            img[i] = k;
            if (self(self, i + 1)) return true;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    std::vector<std::vector<long>> out;
    for (auto k : img) out.push_back(eb[k]);
    return out;
}

inline bool fq_isometric(const FiniteQuadForm& a, const FiniteQuadForm& b, long max_order = 1024)
{
    return fq_isometry(a, b, max_order).has_value();
}

struct GenusVerdict {
    bool match = false;
    bool indefinite = false;
    std::pair<int, int> signature1, signature2;
    mpz_class disc_order1, disc_order2;
    bool disc_isometric = false;
    std::string note;
};

/// Equal rank, signature and isometric discriminant forms. For even indefinite lattices with
/// rank >= l(A) + 2 the genus has one class (Nikulin), which is cited, not re-proved.
inline GenusVerdict genus_match_indefinite(const Lattice& a, const Lattice& b)
{
    GenusVerdict v;
    v.signature1 = a.signature();
    v.signature2 = b.signature();
    v.disc_order1 = abs(a.det());
    v.disc_order2 = abs(b.det());
    v.indefinite = v.signature1.first > 0 && v.signature1.second > 0;
    if (a.rank() != b.rank() || v.signature1 != v.signature2 || v.disc_order1 != v.disc_order2) {
        v.note = "invariants differ";
        return v;
    }
    auto qa = disc_form(a), qb = disc_form(b);
    v.disc_isometric = qa.group_order() == 1 || fq_isometric(qa, qb);
    v.match = v.disc_isometric;
    if (!v.match) v.note = "discriminant forms differ";
    else if (v.indefinite && a.rank() >= qa.length() + 2) v.note = "isomorphic by Nikulin uniqueness (cited)";
    else v.note = "same genus";
    return v;
}

struct CurveLattice {
    Lattice lattice;
    int rank = 0;
    std::pair<int, int> signature;
    std::vector<mpz_class> invariant_factors;  // of the discriminant group, 1s dropped
    mpz_class disc_order;
};

/// The integral span of the given curves modulo the radical of the intersection form.
inline CurveLattice lattice_from_curves(const CurveSystem& cs, const std::vector<std::string>& ids = {})
{
    std::vector<int> idx;
    if (ids.empty())
        for (int k = 0; k < cs.size(); ++k) idx.push_back(k);
    else
        for (const auto& id : ids) idx.push_back(cs.index(id));
    const std::size_t n = idx.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(cs(idx[i], idx[j]));
    auto sf = smith_normal_form(m);
    // x = V z lies in the radical iff z_1 = ... = z_r = 0
    const std::size_t r = sf.rank;
    IntMatrix basis(n, r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < r; ++k) basis(i, k) = sf.V(i, k);
    IntMatrix g = basis.transpose() * m * basis;
    CurveLattice out;
    out.lattice = Lattice("span", g);
    out.rank = static_cast<int>(r);
    out.signature = out.lattice.signature();
    auto s2 = smith_normal_form(g);
    for (const auto& d : s2.invariant_factors)
        if (abs(d) != 1) out.invariant_factors.push_back(abs(d));
    out.disc_order = abs(g.det());
    return out;
}

struct DivisorPairings {
    Rational square;
    std::vector<std::pair<std::string, Rational>> with_curves;
};

/// D^2 and D.C for every curve; throws on a non-integral pairing.
inline DivisorPairings divisor_pairings(const CurveSystem& cs, const std::string& name)
{
    auto v = cs.divisor_vector(name);
    DivisorPairings out;
    out.square = cs.pair(v, v);
    if (!out.square.is_integer()) throw std::domain_error("divisor_pairings: " + name + " has non-integral square");
    for (int k = 0; k < cs.size(); ++k) {
        Rational p = cs.pair_curve(v, k);
        if (!p.is_integer()) throw std::domain_error("divisor_pairings: " + name + "." + cs.id(k) + " is not integral");
        out.with_curves.emplace_back(cs.id(k), p);
    }
    return out;
}

/// Dynkin type of the dual graph of a set of (-2)-curves.
inline std::string classify_dynkin(const CurveSystem& cs, const std::vector<std::string>& ids)
{
    std::vector<int> idx;
    for (const auto& id : ids) {
        idx.push_back(cs.index(id));
        if (cs(idx.back(), idx.back()) != -2) throw std::invalid_argument("classify_dynkin: " + id + " is not a (-2)-curve");
    }
    return dynkin_str(classify_dynkin(cs.submatrix(idx)));
}

/// Nonzero x with |x.x| <= bound for a definite lattice, one from each pair +-x.
inline std::vector<std::vector<long>> short_vectors(const Lattice& l, long bound)
{
    const int n = l.rank();
    auto sig = l.signature();
    long sign = sig.first == n ? 1 : (sig.second == n ? -1 : 0);
    if (sign == 0) throw std::invalid_argument("short_vectors: lattice is not definite");
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = sign * l.gram()(i, j).get_d();
    // Q = R^T D R with R unit upper triangular: x.A.x = sum_i d_i (x_i + sum_{j>i} r_ij x_j)^2
    std::vector<std::vector<double>> r(n, std::vector<double>(n, 0.0));
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) {
        double s = a[i][i];
        for (int k = 0; k < i; ++k) s -= d[k] * r[k][i] * r[k][i];
        d[i] = s;
        for (int j = i + 1; j < n; ++j) {
            double t = a[i][j];
            for (int k = 0; k < i; ++k) t -= d[k] * r[k][i] * r[k][j];
            r[i][j] = t / d[i];
        }
    }
    std::vector<std::vector<long>> out;
    std::vector<long> x(n, 0);
    const double eps = 1e-7;
    auto rec = [&](auto&& self, int i, double remaining) -> void {
        if (i < 0) {
            bool zero = std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
            if (zero) return;
            // keep the representative whose last nonzero coordinate is positive
            for (int k = n - 1; k >= 0; --k)
                if (x[k] != 0) {
                    if (x[k] < 0) return;
                    break;
                }
            std::vector<mpz_class> z(x.begin(), x.end());
            mpz_class nv = l.norm(z) * sign;
            if (nv <= bound) out.push_back(x);
            return;
        }
        double c = 0;
        for (int j = i + 1; j < n; ++j) c += r[i][j] * static_cast<double>(x[j]);
        double w = std::sqrt(std::max(0.0, remaining / d[i])) + eps;
        long lo = static_cast<long>(std::ceil(-c - w)), hi = static_cast<long>(std::floor(-c + w));
        for (long v = lo; v <= hi; ++v) {
            x[i] = v;
            double t = (v + c) * (v + c) * d[i];
            if (t <= remaining + eps) self(self, i - 1, remaining - t);
        }
        x[i] = 0;
    };
    rec(rec, n - 1, static_cast<double>(bound));
    return out;
}

/// Number of roots (vectors of square -2) of a negative definite lattice.
inline long root_count(const Lattice& l)
{
    long n = 0;
    for (const auto& x : short_vectors(l, 2)) {
        std::vector<mpz_class> z(x.begin(), x.end());
        if (l.norm(z) == -2) n += 2;
    }
    return n;
}

/// Overlattice together with its basis written in the coordinates of the original lattice.
struct Overlattice {
    Lattice lattice;
    Matrix<Rational> basis;  // rows
    long index = 1;
};

/// Adds glue vectors (coordinates in the basis of L, lying in L^*) to L. Each glue vector must
/// have even square and glue vectors must pair integrally, so the result is even and integral.
inline Overlattice overlattice(const Lattice& l, const std::vector<std::vector<Rational>>& glue)
{
    const std::size_t n = l.gram().rows();
    auto G = l.gram().to_rational();
    auto pair = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        Rational s;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s += x[i] * G(i, j) * y[j];
        return s;
    };
    for (const auto& g : glue) {
        if (g.size() != n) throw std::invalid_argument("overlattice: glue vector has wrong length");
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> e(n);
            e[i] = Rational(1);
            if (!pair(g, e).is_integer()) throw std::invalid_argument("overlattice: glue vector not in the dual lattice");
        }
        auto q = pair(g, g);
        if (!q.is_integer() || q.num() % 2 != 0) throw std::invalid_argument("overlattice: glue vector is not isotropic");
        for (const auto& h : glue)
            if (!pair(g, h).is_integer()) throw std::invalid_argument("overlattice: glue vectors pair non-integrally");
    }
    // common denominator, then the integral span in row Hermite form
    mpz_class den = 1;
    for (const auto& g : glue)
        for (const auto& c : g) den = lcm(den, c.den());
    IntMatrix gens(n + glue.size(), n);
    for (std::size_t i = 0; i < n; ++i) gens(i, i) = den;
    for (std::size_t k = 0; k < glue.size(); ++k)
        for (std::size_t j = 0; j < n; ++j) gens(n + k, j) = (glue[k][j] * Rational(den, mpz_class(1))).num();
    IntMatrix hb = row_hnf_basis(gens);
    Matrix<Rational> basis(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) basis(i, j) = Rational(hb(i, j), den);
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> x(n), y(n);
            for (std::size_t c = 0; c < n; ++c) {
                x[c] = basis(i, c);
                y[c] = basis(j, c);
            }
            Rational v = pair(x, y);
            if (!v.is_integer()) throw std::logic_error("overlattice: result is not integral");
            g(i, j) = v.num();
        }
    Overlattice out{Lattice(l.name() + "+glue", g), basis, 1};
    mpz_class ratio = abs(l.det()) / abs(g.det());
    mpz_class idx = sqrt(ratio);
    out.index = idx.get_si();
    return out;
}

/// Whether every row of inner is an integral combination of the rows of outer.
inline bool lattice_contains(const Matrix<Rational>& outer, const Matrix<Rational>& inner)
{
    auto t = outer.transpose();
    for (std::size_t i = 0; i < inner.rows(); ++i) {
        std::vector<Rational> b(inner.cols());
        for (std::size_t j = 0; j < inner.cols(); ++j) b[j] = inner(i, j);
        auto s = t.solve(b);
        if (!s) return false;
        for (const auto& c : *s)
            if (!c.is_integer()) return false;
    }
    return true;
}

struct EmbeddingCheck {
    bool isometric = false;
    bool primitive = false;
    bool ok() const { return isometric && primitive; }
};

/// Rows of b are the images of the basis of l in the basis of s.
inline EmbeddingCheck check_primitive_embedding(const Lattice& l, const Lattice& s, const IntMatrix& b)
{
    EmbeddingCheck c;
    if (b.rows() != l.gram().rows() || b.cols() != s.gram().rows()) return c;
    c.isometric = b * s.gram() * b.transpose() == l.gram();
    auto sf = smith_normal_form(b);
    c.primitive = sf.rank == b.rows() &&
                  std::all_of(sf.invariant_factors.begin(), sf.invariant_factors.end(), [](const mpz_class& d) { return abs(d) == 1; });
    return c;
}

}  // namespace desmic

#endif
