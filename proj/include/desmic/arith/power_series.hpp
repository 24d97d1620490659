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

#ifndef DESMIC_ARITH_POWER_SERIES_HPP
#define DESMIC_ARITH_POWER_SERIES_HPP

#include "desmic/arith/multipoly.hpp"

#include <stdexcept>
#include <vector>

namespace desmic {

/// Power series truncated above total degree N.
template <Field K>
class PowerSeriesTrunc {
public:
    static constexpr int default_degree = 8;

    PowerSeriesTrunc() = default;
    PowerSeriesTrunc(MultiPoly<K> p, int n = default_degree) : n_(n), p_(p.truncate(n)) {}

    static PowerSeriesTrunc var(const VarSetPtr& vs, std::size_t i, int n = default_degree)
    {
        return PowerSeriesTrunc(MultiPoly<K>::var(vs, i), n);
    }

    int truncation() const noexcept { return n_; }
    const MultiPoly<K>& poly() const noexcept { return p_; }
    const VarSetPtr& vars() const noexcept { return p_.vars(); }
    bool is_zero() const noexcept { return p_.is_zero(); }
    K constant_term() const { return p_.constant_term(); }
    /// Lowest total degree present, or -1 for zero.
    int order() const
    {
        int o = -1;
        for (const auto& t : p_.terms()) {
            int d = exponent_degree(t.first);
            if (o < 0 || d < o) o = d;
        }
        return o;
    }

    friend PowerSeriesTrunc operator+(const PowerSeriesTrunc& a, const PowerSeriesTrunc& b)
    {
        return PowerSeriesTrunc(a.p_ + b.p_, std::min(a.n_, b.n_));
    }
    friend PowerSeriesTrunc operator-(const PowerSeriesTrunc& a, const PowerSeriesTrunc& b)
    {
        return PowerSeriesTrunc(a.p_ - b.p_, std::min(a.n_, b.n_));
    }
    friend PowerSeriesTrunc operator-(const PowerSeriesTrunc& a) { return PowerSeriesTrunc(-a.p_, a.n_); }
    friend PowerSeriesTrunc operator*(const PowerSeriesTrunc& a, const PowerSeriesTrunc& b)
    {
        int n = std::min(a.n_, b.n_);
        return PowerSeriesTrunc(mul_trunc(a.p_, b.p_, n), n);
    }
    friend bool operator==(const PowerSeriesTrunc& a, const PowerSeriesTrunc& b)
    {
        int n = std::min(a.n_, b.n_);
        return a.p_.truncate(n) == b.p_.truncate(n);
    }

    /// Substitute series with zero constant term for the variables.
    PowerSeriesTrunc compose(const std::vector<PowerSeriesTrunc>& images) const
    {
        if (images.size() != p_.nvars()) throw std::invalid_argument("PowerSeriesTrunc::compose: arity mismatch");
        VarSetPtr target;
        for (const auto& im : images) {
            if (!im.constant_term().is_zero())
                throw std::invalid_argument("PowerSeriesTrunc::compose: image with nonzero constant term");
            if (im.vars()) target = im.vars();
        }
        std::vector<std::vector<MultiPoly<K>>> pw(images.size());
        for (auto& v : pw) v.push_back(MultiPoly<K>::constant(target, K(1)));
        MultiPoly<K> r = MultiPoly<K>::constant(target, K(0));
        for (const auto& [e, c] : p_.terms()) {
            MultiPoly<K> m = MultiPoly<K>::constant(target, c);
            for (std::size_t i = 0; i < e.size() && !m.is_zero(); ++i) {
                if (!e[i]) continue;
                auto& cache = pw[i];
                while (cache.size() <= e[i]) cache.push_back(mul_trunc(cache.back(), images[i].p_, n_));
                m = mul_trunc(m, cache[e[i]], n_);
            }
            r += m;
        }
        return PowerSeriesTrunc(r, n_);
    }

private:
    static MultiPoly<K> mul_trunc(const MultiPoly<K>& a, const MultiPoly<K>& b, int n)
    {
        // split by degree so that products above n are never formed
        int da = a.total_degree(), db = b.total_degree();
        if (da < 0 || db < 0) return a * b;
        MultiPoly<K> r = MultiPoly<K>::constant(a.vars() ? a.vars() : b.vars(), K(0));
        std::vector<MultiPoly<K>> ha, hb;
        for (int i = 0; i <= da; ++i) ha.push_back(a.homogeneous_part(i));
        for (int j = 0; j <= db; ++j) hb.push_back(b.homogeneous_part(j));
        for (int i = 0; i <= da; ++i)
            for (int j = 0; j <= db && i + j <= n; ++j)
                if (!ha[i].is_zero() && !hb[j].is_zero()) r += ha[i] * hb[j];
        return r;
    }

    int n_ = default_degree;
    MultiPoly<K> p_;
};

}  // namespace desmic

#endif
