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

#ifndef DESMIC_SURFACE_RDP_HPP
#define DESMIC_SURFACE_RDP_HPP

#include "desmic/arith/power_series.hpp"
#include "desmic/surface/hypersurface.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace desmic {

struct AnVerdict {
    enum class Kind { A, Inconclusive };
    Kind kind = Kind::Inconclusive;
    int n = 0;

    bool is_a(int m) const { return kind == Kind::A && n == m; }
    std::string str() const { return kind == Kind::A ? "A" + std::to_string(n) : "inconclusive"; }
};

namespace detail {

/// Root of a x^2 + b x + c in K, if any.
template <Field K>
std::optional<K> quadratic_root(const K& a, const K& b, const K& c)
{
    if constexpr (is_finite_field_v<K>) {
        for (const auto& x : field_elements<K>())
            if ((a * x * x + b * x + c).is_zero()) return x;
        return std::nullopt;
    } else {
        if (K::characteristic == 2) throw std::domain_error("quadratic_root: characteristic 2 over an infinite field");
        auto s = field_sqrt(b * b - K(4) * a * c);
        if (!s) return std::nullopt;
        return (-b + *s) / (K(2) * a);
    }
}

}  // namespace detail

/// A_n type of a surface singularity from its local equation in three variables.
///
/// The quadratic part must have polar rank 3 (A_1) or 2, in which case it is brought
/// to uv and terms divisible by u or v are absorbed by u -> u - B, v -> v - A until
/// only uv + c t^(n+1) + ... remains below the truncation degree.
template <Field K>
AnVerdict rdp_an_type(const PowerSeriesTrunc<K>& f, int max_n)
{
    const VarSetPtr& vs = f.vars();
    if (!vs || vs->size() != 3) throw std::invalid_argument("rdp_an_type: local equation must have three variables");
    const int trunc = f.truncation();
    const auto& p = f.poly();
    if (!p.homogeneous_part(0).is_zero() || !p.homogeneous_part(1).is_zero())
        throw std::invalid_argument("rdp_an_type: local equation is not singular at the origin");

    std::vector<std::size_t> xyz{0, 1, 2};
    auto q2 = p.homogeneous_part(2);
    auto [smooth, rk] = detail::smooth_quadric(q2, xyz);
    if (smooth) return {AnVerdict::Kind::A, 1};
    if (rk < 2) throw std::domain_error("rdp_an_type: quadratic part of rank < 2, not A-type at this precision");

    auto pol = polar_matrix(q2, xyz);
    Matrix<K> m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = pol[i][j].constant_term();
    std::vector<K> kv = m.kernel().at(0);

    // complete the kernel vector to a basis with two unit vectors
    std::vector<std::vector<K>> w;
    for (std::size_t i = 0; i < 3 && w.size() < 2; ++i) {
        std::vector<K> e(3, K(0));
        e[i] = K(1);
        auto rows = w;
        rows.push_back(kv);
        rows.push_back(e);
        if (Matrix<K>::from_rows(rows).rank() == rows.size()) w.push_back(e);
    }
    auto q_at = [&](const std::vector<K>& x) { return q2.eval(x); };
    std::vector<K> w12(3);
    for (int i = 0; i < 3; ++i) w12[i] = w[0][i] + w[1][i];
    K al = q_at(w[0]), ga = q_at(w[1]);
    K be = q_at(w12) - al - ga;

    // q2(s1 w1 + s2 w2) = u v with (u, v) = P (s1, s2)
    Matrix<K> P(2, 2);
    if (al.is_zero()) {
        P = Matrix<K>{{K(0), K(1)}, {be, ga}};
    } else {
        auto rho = detail::quadratic_root(al, be, ga);
        if (!rho) throw std::domain_error("rdp_an_type: quadratic part does not split over the field");
        K rho2 = -be / al - *rho;
        P = Matrix<K>{{al, -al * *rho}, {K(1), -rho2}};
    }
    K d = P.det();
    Matrix<K> Pi{{P(1, 1) / d, -P(0, 1) / d}, {-P(1, 0) / d, P(0, 0) / d}};

    auto uvt = make_vars({"u", "v", "t"});
    using PS = PowerSeriesTrunc<K>;
    PS u = PS::var(uvt, 0, trunc), v = PS::var(uvt, 1, trunc), t = PS::var(uvt, 2, trunc);
    PS s1 = PS(Pi(0, 0) * u.poly() + Pi(0, 1) * v.poly(), trunc);
    PS s2 = PS(Pi(1, 0) * u.poly() + Pi(1, 1) * v.poly(), trunc);
    std::vector<PS> lin;
    for (int i = 0; i < 3; ++i)
        lin.push_back(PS(w[0][i] * s1.poly() + w[1][i] * s2.poly() + kv[i] * t.poly(), trunc));
    PS g = f.compose(lin);

    auto uv = MultiPoly<K>::var(uvt, 0) * MultiPoly<K>::var(uvt, 1);
    if (g.poly().homogeneous_part(2) != uv) throw std::logic_error("rdp_an_type: failed to normalize quadratic part");

    for (int iter = 0; iter <= trunc; ++iter) {
        std::vector<std::pair<Exponent, K>> at, bt;
        MultiPoly<K> rest = g.poly() - uv;
        for (const auto& [e, c] : rest.terms()) {
            if (e[0] > 0) {
                Exponent f2 = e;
                --f2[0];
                at.emplace_back(f2, c);
            } else if (e[1] > 0) {
                Exponent f2 = e;
                --f2[1];
                bt.emplace_back(f2, c);
            }
        }
        if (at.empty() && bt.empty()) break;
        auto A = MultiPoly<K>::from_terms(uvt, at), B = MultiPoly<K>::from_terms(uvt, bt);
        g = g.compose({PS(u.poly() - B, trunc), PS(v.poly() - A, trunc), t});
    }

    MultiPoly<K> rest = g.poly() - uv;
    for (const auto& [e, c] : rest.terms())
        if (e[0] || e[1]) return {AnVerdict::Kind::Inconclusive, 0};
    int low = -1;
    for (const auto& [e, c] : rest.terms())
        if (low < 0 || e[2] < low) low = e[2];
    if (low < 0 || low > trunc || low - 1 > max_n) return {AnVerdict::Kind::Inconclusive, 0};
    return {AnVerdict::Kind::A, low - 1};
}

/// A_n verdict at a singular point of a surface in P^3 without parameters.
template <Field K>
AnVerdict an_type_at(const Form<K>& f, const ProjPoint<K>& p, int max_n = 8, int trunc = 10)
{
    if (f.has_parameters()) throw std::invalid_argument("an_type_at: form has parameters");
    if (f.ncoords() != 4) throw std::invalid_argument("an_type_at: needs a surface in P^3");
    if (!singular_at(f, p).singular) throw std::invalid_argument("an_type_at: point is not singular");
    return rdp_an_type(PowerSeriesTrunc<K>(local_equation(f, p), trunc), max_n);
}

}  // namespace desmic

#endif
