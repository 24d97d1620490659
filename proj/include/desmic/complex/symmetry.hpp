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

#ifndef DESMIC_COMPLEX_SYMMETRY_HPP
#define DESMIC_COMPLEX_SYMMETRY_HPP

#include "desmic/arith/field.hpp"
#include "desmic/arith/matrix.hpp"
#include "desmic/complex/line_complex.hpp"
#include "desmic/config/perm.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace desmic {

/// Monomial map x_k -> i^{e_k} x_{perm(k)}; as a matrix, row k has i^{e_k} in column perm(k).
/// Projective classes are normalized to e_0 = 0.
struct MonomialMap {
    std::vector<int> perm;
    std::vector<int> e;

    std::size_t size() const { return perm.size(); }

    /// (g*h) x = g(h(x)) as matrices.
    friend MonomialMap operator*(const MonomialMap& g, const MonomialMap& h)
    {
        MonomialMap r{std::vector<int>(g.size()), std::vector<int>(g.size())};
        for (std::size_t k = 0; k < g.size(); ++k) {
            r.perm[k] = h.perm[g.perm[k]];
            r.e[k] = (g.e[k] + h.e[g.perm[k]]) % 4;
        }
        return r.normalized();
    }

    MonomialMap normalized() const
    {
        MonomialMap r = *this;
        int s = e.empty() ? 0 : e[0];
        for (auto& x : r.e) x = ((x - s) % 4 + 4) % 4;
        return r;
    }

    friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
    friend auto operator<=>(const MonomialMap&, const MonomialMap&) = default;

    template <Field K>
    Matrix<K> matrix() const
    {
        std::array<K, 4> u{K(1), imag_unit<K>(), K(-1), -imag_unit<K>()};
        Matrix<K> m(size(), size());
        for (std::size_t k = 0; k < size(); ++k) m(k, perm[k]) = u[e[k]];
        return m;
    }

    template <Field K>
    ProjPoint<K> apply(const ProjPoint<K>& x) const
    {
        std::array<K, 4> u{K(1), imag_unit<K>(), K(-1), -imag_unit<K>()};
        std::vector<K> y(size());
        for (std::size_t k = 0; k < size(); ++k) y[k] = u[e[k]] * x[perm[k]];
        return ProjPoint<K>(std::move(y));
    }

    std::string str() const
    {
        static const char* u[] = {"", "i*", "-", "-i*"};
        std::string s = "(";
        for (std::size_t k = 0; k < size(); ++k) s += (k ? "," : "") + std::string(u[e[k]]) + "x" + std::to_string(perm[k] + 1);
        return s + ")";
    }
};

/// The block swap (x, y) -> (-y, x) in Klein coordinates.
inline MonomialMap block_swap_g0()
{
    return MonomialMap{{3, 4, 5, 0, 1, 2}, {2, 2, 2, 0, 0, 0}}.normalized();
}

template <Field K>
struct SymmetryReport {
    std::uint64_t candidates_examined = 0;
    std::vector<MonomialMap> elements;
    bool closed = false;
    bool g0_found = false;
    std::vector<std::size_t> node_orbit_sizes;
    std::vector<std::size_t> plane_orbit_sizes;
    /// Every plane is sent to a listed plane by every element.
    bool planes_preserved = false;
    /// Every node orbit lies inside one of the two printed node families.
    bool orbits_refine_families = false;

    std::size_t order() const { return elements.size(); }
};

namespace detail {
template <Field K>
struct TermList {
    std::vector<std::vector<int>> exps;
    std::vector<K> coefs;
};

template <Field K>
TermList<K> term_list(const Form<K>& f)
{
    TermList<K> t;
    for (const auto& [e, c] : f.poly().terms()) {
        std::vector<int> v;
        for (auto i : f.coords()) v.push_back(e[i]);
        t.exps.push_back(std::move(v));
        t.coefs.push_back(c);
    }
    return t;
}

// f(Mx) = lambda f(x) for some lambda != 0.
template <Field K>
bool preserves(const TermList<K>& f, const std::vector<int>& perm, const std::vector<int>& e, const std::array<K, 4>& u)
{
    const std::size_t n = perm.size();
    std::vector<int> img(n);
    std::vector<std::size_t> target(f.exps.size());
    for (std::size_t t = 0; t < f.exps.size(); ++t) {
        for (std::size_t k = 0; k < n; ++k) img[perm[k]] = f.exps[t][k];
        auto it = std::find(f.exps.begin(), f.exps.end(), img);
        if (it == f.exps.end()) return false;
        target[t] = it - f.exps.begin();
    }
    std::optional<K> lambda;
    for (std::size_t t = 0; t < f.exps.size(); ++t) {
        int s = 0;
        for (std::size_t k = 0; k < n; ++k) s += e[k] * f.exps[t][k];
        K c = f.coefs[t] * u[s % 4] / f.coefs[target[t]];
        if (!lambda) lambda = c;
        else if (!(c == *lambda)) return false;
    }
    return true;
}

template <Field K>
bool preserves_exactly(const Form<K>& f, const MonomialMap& g)
{
    std::array<K, 4> u{K(1), imag_unit<K>(), K(-1), -imag_unit<K>()};
    std::map<std::string, MultiPoly<K>> im;
    for (std::size_t k = 0; k < g.size(); ++k)
        im[f.vars()->name(f.coords()[k])] = u[g.e[k]] * MultiPoly<K>::var(f.vars(), f.coords()[g.perm[k]]);
    return proportionality(f.poly().subst(im, f.vars()), f.poly()).has_value();
}

inline std::vector<std::size_t> orbit_sizes(const std::vector<std::vector<int>>& actions, std::size_t n)
{
    std::vector<int> orbit(n, -1);
    std::vector<std::size_t> sizes;
    for (std::size_t s = 0; s < n; ++s) {
        if (orbit[s] >= 0) continue;
        std::size_t id = sizes.size();
        sizes.push_back(0);
        std::vector<std::size_t> stack{s};
        orbit[s] = static_cast<int>(id);
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            ++sizes[id];
            for (const auto& a : actions) {
                auto y = static_cast<std::size_t>(a[x]);
                if (orbit[y] < 0) {
                    orbit[y] = static_cast<int>(id);
                    stack.push_back(y);
                }
            }
        }
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}
}  // namespace detail

/// Exhaustive search of the monomial matrices with entries in {1, i, -1, -i} (up to scalar)
/// preserving both equations of ci up to scalar, followed by closure and orbit checks.
template <Field K>
SymmetryReport<K> monomial_symmetry_group(const CompleteIntersection<K>& ci, const std::vector<ProjPoint<K>>& sing1,
                                          const std::vector<ProjPoint<K>>& sing2,
                                          const std::vector<ComplexPlane<K>>& planes, unsigned threads = 1,
                                          double budget_seconds = 600)
{
    if (K::characteristic == 2 || !has_imag_unit<K>())
        throw std::domain_error("monomial_symmetry_group: needs characteristic != 2 and i in the field");
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = ci.ncoords();
    const std::array<K, 4> u{K(1), imag_unit<K>(), K(-1), -imag_unit<K>()};
    auto tq = detail::term_list(ci.quadric), tc = detail::term_list(ci.cubic);
    auto perms = all_perms(n);
    std::size_t ne = 1;
    for (std::size_t k = 1; k < n; ++k) ne *= 4;

    std::vector<std::vector<MonomialMap>> found(perms.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> over_budget{false};
    auto worker = [&] {
        for (std::size_t pi; (pi = next.fetch_add(1)) < perms.size();) {
            if (std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > budget_seconds) {
                over_budget = true;
                return;
            }
            const auto& perm = perms[pi].images();
            std::vector<int> e(n, 0);
            for (std::size_t m = 0; m < ne; ++m) {
                std::size_t r = m;
                for (std::size_t k = n - 1; k >= 1; --k, r /= 4) e[k] = static_cast<int>(r % 4);
                if (detail::preserves(tq, perm, e, u) && detail::preserves(tc, perm, e, u))
                    found[pi].push_back(MonomialMap{perm, e});
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (over_budget) throw std::runtime_error("monomial_symmetry_group: search budget exceeded");

    SymmetryReport<K> rep;
    rep.candidates_examined = static_cast<std::uint64_t>(perms.size()) * ne;
    for (auto& f : found)
        for (auto& g : f) {
            if (!detail::preserves_exactly(ci.quadric, g) || !detail::preserves_exactly(ci.cubic, g))
                throw std::logic_error("monomial_symmetry_group: filter accepted " + g.str());
            rep.elements.push_back(std::move(g));
        }
    std::sort(rep.elements.begin(), rep.elements.end());

    std::set<MonomialMap> set(rep.elements.begin(), rep.elements.end());
    rep.closed = true;
    for (const auto& a : rep.elements) {
        for (const auto& b : rep.elements)
            if (!set.count(a * b)) {
                rep.closed = false;
                break;
            }
        if (!rep.closed) break;
    }
    rep.g0_found = set.count(block_swap_g0()) > 0;

    // Node action, by lookup of normalized images.
    std::vector<ProjPoint<K>> nodes = sing1;
    nodes.insert(nodes.end(), sing2.begin(), sing2.end());
    std::map<std::string, int> index;
    for (std::size_t j = 0; j < nodes.size(); ++j) index[nodes[j].normalized().str()] = static_cast<int>(j);
    std::vector<std::vector<int>> node_act;
    bool nodes_ok = true;
    for (const auto& g : rep.elements) {
        std::vector<int> a;
        for (const auto& p : nodes) {
            auto it = index.find(g.apply(p).normalized().str());
            if (it == index.end()) {
                nodes_ok = false;
                a.push_back(0);
            } else {
                a.push_back(it->second);
            }
        }
        node_act.push_back(std::move(a));
    }
    rep.node_orbit_sizes = detail::orbit_sizes(node_act, nodes.size());
    rep.orbits_refine_families = nodes_ok;
    for (const auto& a : node_act)
        for (std::size_t j = 0; j < nodes.size(); ++j)
            if ((j < sing1.size()) != (static_cast<std::size_t>(a[j]) < sing1.size())) rep.orbits_refine_families = false;

    // Plane action through node sets; each plane must be spanned by its nodes.
    std::map<std::vector<int>, int> plane_index;
    bool planes_ok = nodes_ok;
    std::vector<std::vector<int>> plane_nodes;
    for (std::size_t k = 0; k < planes.size(); ++k) {
        std::vector<int> s;
        std::vector<std::vector<K>> rows;
        for (std::size_t j = 0; j < nodes.size(); ++j)
            if (planes[k].contains(nodes[j])) {
                s.push_back(static_cast<int>(j));
                rows.push_back(nodes[j].coords());
            }
        if (rows.empty() || Matrix<K>::from_rows(rows).rank() != 3 || plane_index.count(s)) planes_ok = false;
        plane_index[s] = static_cast<int>(k);
        plane_nodes.push_back(std::move(s));
    }
    std::vector<std::vector<int>> plane_act;
    for (const auto& a : node_act) {
        std::vector<int> pa;
        for (const auto& s : plane_nodes) {
            std::vector<int> img;
            for (int j : s) img.push_back(a[j]);
            std::sort(img.begin(), img.end());
            auto it = plane_index.find(img);
            if (it == plane_index.end()) {
                planes_ok = false;
                pa.push_back(0);
            } else {
                pa.push_back(it->second);
            }
        }
        plane_act.push_back(std::move(pa));
    }
    rep.planes_preserved = planes_ok;
    rep.plane_orbit_sizes = detail::orbit_sizes(plane_act, planes.size());
    return rep;
}

}  // namespace desmic

#endif
