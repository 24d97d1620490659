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

#ifndef DESMIC_COMPLEX_SCAN_HPP
#define DESMIC_COMPLEX_SCAN_HPP

// Exhaustive search for singular points of V(f_1,...,f_r) over P^n(F_p), with forms
// defined over Z[i]. Arithmetic is plain int64 modulo a runtime prime.

#include "desmic/arith/gaussian.hpp"
#include "desmic/arith/multipoly.hpp"
#include "desmic/geom/proj.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace desmic {

struct ScanResult {
    std::int64_t prime = 0;
    std::uint64_t points_examined = 0;
    /// Singular points, normalized (first nonzero coordinate 1), in enumeration order.
    std::vector<std::vector<std::int64_t>> points;

    std::size_t count() const noexcept { return points.size(); }
};

struct ScanOptions {
    unsigned threads = 1;
    /// Refuse primes whose projective space has more points than this.
    std::uint64_t max_points = 200'000'000;
};

namespace detail {
inline bool is_prime_ll(std::int64_t p)
{
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p)
{
    std::int64_t r = 1;
    b %= p;
    for (; e; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return r;
}

/// Smallest x in [1, p) with x^2 = -1 mod p.
inline std::int64_t sqrt_minus_one(std::int64_t p)
{
    for (std::int64_t x = 1; x < p; ++x)
        if (x * x % p == p - 1) return x;
    throw std::domain_error("sqrt_minus_one: -1 is not a square mod " + std::to_string(p));
}

inline std::int64_t rational_mod(const Rational& q, std::int64_t p)
{
    mpz_class pm(static_cast<long>(p));
    mpz_class n = q.num() % pm, d = q.den() % pm;
    if (n < 0) n += pm;
    if (d < 0) d += pm;
    if (d == 0) throw std::domain_error("scan: coefficient denominator divisible by p");
    return n.get_si() * mod_pow(d.get_si(), p - 2, p) % p;
}

struct ModForm {
    std::vector<std::int64_t> coef;
    std::vector<std::vector<std::uint8_t>> exps;
    int max_exp = 0;
};

inline ModForm reduce_form(const MultiPoly<Gaussian>& f, std::int64_t p, std::int64_t ip)
{
    ModForm m;
    for (const auto& [e, c] : f.terms()) {
        std::int64_t v = (rational_mod(c.re(), p) + rational_mod(c.im(), p) * ip) % p;
        if (v == 0) continue;
        m.coef.push_back(v);
        m.exps.emplace_back(e.begin(), e.end());
        for (int x : e) m.max_exp = std::max(m.max_exp, x);
    }
    return m;
}

inline std::int64_t eval_mod(const ModForm& f, const std::vector<std::vector<std::int64_t>>& pw, std::int64_t p)
{
    std::int64_t s = 0;
    for (std::size_t t = 0; t < f.coef.size(); ++t) {
        std::int64_t v = f.coef[t];
        const auto& e = f.exps[t];
        for (std::size_t k = 0; k < e.size() && v; ++k)
            if (e[k]) v = v * pw[k][e[k]] % p;
        s += v;
    }
    return s % p;
}

inline std::size_t rank_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t p)
{
    std::size_t r = 0, cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        std::int64_t inv = mod_pow(m[r][c], p - 2, p);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            std::int64_t f = m[i][c] * inv % p;
            if (!f) continue;
            for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
        }
        ++r;
    }
    return r;
}
}  // namespace detail

/// Number of points of P^n(F_p), n = ncoords - 1.
inline std::uint64_t projective_point_count(std::int64_t p, std::size_t ncoords)
{
    std::uint64_t s = 0, q = 1;
    for (std::size_t k = 0; k < ncoords; ++k, q *= static_cast<std::uint64_t>(p)) s += q;
    return s;
}

/// Points where every form vanishes and the Jacobian of the forms has rank < number of forms.
/// Forms must all live in the same ring; every ring variable is a coordinate.
inline ScanResult scan_singular_points(const std::vector<MultiPoly<Gaussian>>& forms, std::int64_t p,
                                       const ScanOptions& opt = {})
{
    if (forms.empty()) throw std::invalid_argument("scan_singular_points: no forms");
    if (!detail::is_prime_ll(p) || p > 46340) throw std::invalid_argument("scan_singular_points: need a prime below 46341");
    const std::size_t n = forms[0].nvars();
    for (const auto& f : forms)
        if (f.nvars() != n || !same_vars(f.vars(), forms[0].vars()))
            throw std::invalid_argument("scan_singular_points: forms live in different rings");
    bool uses_i = false;
    for (const auto& f : forms)
        for (const auto& [e, c] : f.terms()) uses_i = uses_i || !c.im().is_zero();
    if (uses_i && p % 4 != 1) throw std::invalid_argument("scan_singular_points: forms use i, need p = 1 mod 4");
    const std::uint64_t total = projective_point_count(p, n);
    if (total > opt.max_points)
        throw std::length_error("scan_singular_points: P^" + std::to_string(n - 1) + "(F_" + std::to_string(p) +
                                ") exceeds the point budget");
    const std::int64_t ip = uses_i ? detail::sqrt_minus_one(p) : 0;

    std::vector<detail::ModForm> mf, grad;
    int maxe = 1;
    for (const auto& f : forms) {
        mf.push_back(detail::reduce_form(f, p, ip));
        maxe = std::max(maxe, mf.back().max_exp);
        for (std::size_t k = 0; k < n; ++k) grad.push_back(detail::reduce_form(f.diff(k), p, ip));
    }

    // Task (lead, v): points with x_j = 0 for j < lead, x_lead = 1, x_{lead+1} = v.
    struct Task {
        std::size_t lead;
        std::int64_t v;
    };
    std::vector<Task> tasks;
    for (std::size_t lead = 0; lead < n; ++lead) {
        if (lead + 1 == n) tasks.push_back({lead, -1});
        else
            for (std::int64_t v = 0; v < p; ++v) tasks.push_back({lead, v});
    }
    std::vector<std::vector<std::vector<std::int64_t>>> found(tasks.size());
    std::vector<std::uint64_t> examined(tasks.size(), 0);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        std::vector<std::vector<std::int64_t>> pw(n, std::vector<std::int64_t>(maxe + 1, 0));
        std::vector<std::int64_t> x(n);
        std::vector<std::vector<std::int64_t>> jac(forms.size(), std::vector<std::int64_t>(n));
        for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
            const Task& tk = tasks[t];
            std::fill(x.begin(), x.end(), 0);
            x[tk.lead] = 1;
            std::size_t first_free = tk.lead + 1;
            if (tk.v >= 0) x[first_free++] = tk.v;
            while (true) {
                ++examined[t];
                for (std::size_t k = 0; k < n; ++k) {
                    pw[k][0] = 1;
                    for (int e = 1; e <= maxe; ++e) pw[k][e] = pw[k][e - 1] * x[k] % p;
                }
                bool zero = true;
                for (const auto& f : mf)
                    if (detail::eval_mod(f, pw, p)) {
                        zero = false;
                        break;
                    }
                if (zero) {
                    for (std::size_t i = 0; i < forms.size(); ++i)
                        for (std::size_t k = 0; k < n; ++k) jac[i][k] = detail::eval_mod(grad[i * n + k], pw, p);
                    if (detail::rank_mod(jac, p) < forms.size()) found[t].push_back(x);
                }
                // Odometer over x[first_free..n-1], last coordinate fastest.
                std::size_t k = n;
                while (k > first_free) {
                    --k;
                    if (++x[k] < p) break;
                    x[k] = 0;
                    if (k == first_free) {
                        k = n + 1;
                        break;
                    }
                }
                if (k == n + 1 || first_free >= n) break;
            }
        }
    };
    unsigned nt = std::max(1u, opt.threads);
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < nt; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    ScanResult r;
    r.prime = p;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        r.points_examined += examined[t];
        r.points.insert(r.points.end(), found[t].begin(), found[t].end());
    }
    if (r.points_examined != total) throw std::logic_error("scan_singular_points: enumeration miscount");
    return r;
}

/// Reduction mod p of a point with Gaussian coordinates, normalized; i maps to the smallest sqrt(-1).
inline std::vector<std::int64_t> reduce_point(const ProjPoint<Gaussian>& pt, std::int64_t p)
{
    std::int64_t ip = p % 4 == 1 ? detail::sqrt_minus_one(p) : 0;
    std::vector<std::int64_t> v;
    for (const auto& c : pt.coords()) {
        if (!c.im().is_zero() && !ip) throw std::domain_error("reduce_point: i is not in F_p");
        v.push_back((detail::rational_mod(c.re(), p) + detail::rational_mod(c.im(), p) * ip) % p);
    }
    std::size_t k = 0;
    while (k < v.size() && v[k] == 0) ++k;
    if (k == v.size()) throw std::domain_error("reduce_point: point vanishes mod p");
    std::int64_t inv = detail::mod_pow(v[k], p - 2, p);
    for (auto& c : v) c = c * inv % p;
    return v;
}

}  // namespace desmic

#endif
