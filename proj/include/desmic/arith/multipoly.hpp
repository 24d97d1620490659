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

#ifndef DESMIC_ARITH_MULTIPOLY_HPP
#define DESMIC_ARITH_MULTIPOLY_HPP

#include "desmic/arith/field.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace desmic {

/// Ordered list of variable names. Variable 0 is the highest in lex order.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names))
    {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (names_[i] == names_[j]) throw std::invalid_argument("VarSet: duplicate variable " + names_[i]);
    }

    const std::vector<std::string>& names() const noexcept { return names_; }
    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    std::optional<std::size_t> find(std::string_view n) const
    {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return i;
        return std::nullopt;
    }
    std::size_t index(std::string_view n) const
    {
        if (auto i = find(n)) return *i;
        throw std::invalid_argument("VarSet: unknown variable " + std::string(n));
    }

private:
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_vars(std::vector<std::string> names)
{
    return std::make_shared<const VarSet>(std::move(names));
}

inline bool same_vars(const VarSetPtr& a, const VarSetPtr& b)
{
    return a == b || (a && b && a->names() == b->names());
}

using Exponent = std::vector<std::uint16_t>;

inline int exponent_degree(const Exponent& e)
{
    int d = 0;
    for (auto k : e) d += k;
    return d;
}

/// Sparse multivariate polynomial over a field K. Polynomials without a ring are
/// constants and combine with polynomials of any ring.
template <Field K>
class MultiPoly {
public:
    using Terms = std::map<Exponent, K>;

    MultiPoly() = default;
    MultiPoly(const K& c)  // NOLINT(google-explicit-constructor)
    {
        if (!c.is_zero()) terms_.emplace(Exponent{}, c);
    }
    MultiPoly(long long c) : MultiPoly(K(c)) {}  // NOLINT(google-explicit-constructor)
    MultiPoly(int c) : MultiPoly(K(static_cast<long long>(c))) {}  // NOLINT(google-explicit-constructor)

    static MultiPoly var(const VarSetPtr& vs, std::size_t i)
    {
        if (!vs || i >= vs->size()) throw std::out_of_range("MultiPoly::var: index out of range");
        Exponent e(vs->size(), 0);
        e[i] = 1;
        return monomial(vs, std::move(e), K(1));
    }
    static MultiPoly var(const VarSetPtr& vs, std::string_view n) { return var(vs, vs->index(n)); }

    static MultiPoly constant(const VarSetPtr& vs, const K& c)
    {
        return monomial(vs, Exponent(vs ? vs->size() : 0, 0), c);
    }

    static MultiPoly monomial(const VarSetPtr& vs, Exponent e, const K& c)
    {
        if (e.size() != (vs ? vs->size() : 0)) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
        MultiPoly p;
        p.vars_ = vs;
        if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
        return p;
    }

    /// Build from (exponent, coefficient) pairs; zero coefficients are dropped, repeats are summed.
    static MultiPoly from_terms(const VarSetPtr& vs, const std::vector<std::pair<Exponent, K>>& ts)
    {
        MultiPoly p;
        p.vars_ = vs;
        for (const auto& [e, c] : ts) {
            if (e.size() != (vs ? vs->size() : 0)) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
            p.add_term(e, c);
        }
        return p;
    }

    const VarSetPtr& vars() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_ ? vars_->size() : 0; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && exponent_degree(terms_.begin()->first) == 0);
    }
    K constant_term() const { return coeff(Exponent(nvars(), 0)); }

    K coeff(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? K(0) : it->second;
    }

    /// -1 for the zero polynomial.
    int total_degree() const
    {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, exponent_degree(t.first));
        return d;
    }
    int degree(std::size_t v) const
    {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.at(v)));
        return d;
    }
    int degree(std::string_view n) const { return degree(ring_index(n)); }

    bool is_homogeneous() const
    {
        if (terms_.empty()) return true;
        int d = exponent_degree(terms_.begin()->first);
        for (const auto& t : terms_)
            if (exponent_degree(t.first) != d) return false;
        return true;
    }

    MultiPoly homogeneous_part(int d) const
    {
        MultiPoly r = empty_like();
        for (const auto& t : terms_)
            if (exponent_degree(t.first) == d) r.terms_.insert(t);
        return r;
    }

    /// Drop all terms of total degree above maxdeg.
    MultiPoly truncate(int maxdeg) const
    {
        MultiPoly r = empty_like();
        for (const auto& t : terms_)
            if (exponent_degree(t.first) <= maxdeg) r.terms_.insert(t);
        return r;
    }

    /// Lex-largest term (variable 0 highest).
    std::pair<Exponent, K> leading_term() const
    {
        if (terms_.empty()) throw std::domain_error("MultiPoly: leading term of zero");
        return *terms_.rbegin();
    }

    MultiPoly& operator+=(const MultiPoly& o)
    {
        adopt_ring(o);
        if (!o.vars_ && vars_) {
            for (const auto& [e, c] : o.terms_) add_term(Exponent(nvars(), 0), c);
            return *this;
        }
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) { return *this += -o; }
    MultiPoly& operator*=(const MultiPoly& o)
    {
        *this = *this * o;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly& a)
    {
        MultiPoly r = a;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
    {
        VarSetPtr vs = common_ring(a, b);
        std::size_t n = vs ? vs->size() : 0;
        MultiPoly r;
        r.vars_ = vs;
        if (a.is_zero() || b.is_zero()) return r;
        Exponent e(n, 0);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < n; ++i)
                    e[i] = static_cast<std::uint16_t>((ea.empty() ? 0 : ea[i]) + (eb.empty() ? 0 : eb[i]));
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    friend MultiPoly operator*(const K& c, const MultiPoly& a)
    {
        MultiPoly r = a.empty_like();
        if (c.is_zero()) return r;
        for (const auto& [e, x] : a.terms_) r.terms_.emplace(e, c * x);
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        if (a.terms_.size() != b.terms_.size()) return false;
        if (a.is_constant() && b.is_constant()) return a.constant_term() == b.constant_term();
        if (!same_vars(a.vars_, b.vars_)) return false;
        return a.terms_ == b.terms_;
    }

    MultiPoly pow(unsigned k) const
    {
        MultiPoly r = constant(vars_, K(1)), b = *this;
        for (; k; k >>= 1) {
            if (k & 1) r = r * b;
            if (k > 1) b = b * b;
        }
        return r;
    }

    /// Formal partial derivative; in characteristic p the factor e is reduced mod p.
    MultiPoly diff(std::size_t v) const
    {
        if (v >= nvars()) throw std::out_of_range("MultiPoly::diff: variable index out of range");
        MultiPoly r = empty_like();
        for (const auto& [e, c] : terms_) {
            if (e[v] == 0) continue;
            Exponent f = e;
            --f[v];
            r.add_term(f, K(static_cast<long long>(e[v])) * c);
        }
        return r;
    }
    MultiPoly diff(std::string_view n) const { return diff(ring_index(n)); }

    K eval(const std::vector<K>& pt) const
    {
        if (pt.size() != nvars()) throw std::invalid_argument("MultiPoly::eval: arity mismatch");
        K s(0);
        std::vector<std::vector<K>> pw(pt.size(), std::vector<K>{K(1)});
        for (const auto& [e, c] : terms_) {
            K m = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                auto& cache = pw[i];
                while (cache.size() <= e[i]) cache.push_back(cache.back() * pt[i]);
                m = m * cache[e[i]];
            }
            s = s + m;
        }
        return s;
    }

    /// Substitute values for some variables; the ring is kept.
    MultiPoly specialize(const std::map<std::string, K>& values) const
    {
        std::vector<std::optional<K>> val(nvars());
        for (const auto& [n, v] : values) val[ring_index(n)] = v;
        MultiPoly r = empty_like();
        for (const auto& [e, c] : terms_) {
            Exponent f = e;
            K m = c;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (val[i] && f[i]) {
                    m = m * field_pow(*val[i], f[i]);
                    f[i] = 0;
                }
            r.add_term(f, m);
        }
        return r;
    }

    /// Replace variable i by images[i]; all images must share one ring.
    MultiPoly subst(const std::vector<MultiPoly>& images) const
    {
        if (images.size() != nvars()) throw std::invalid_argument("poly_subst: arity mismatch");
        VarSetPtr target;
        for (const auto& im : images) {
            if (!im.vars_) continue;
            if (target && !same_vars(target, im.vars_)) throw std::invalid_argument("poly_subst: images live in different rings");
            target = im.vars_;
        }
        std::vector<std::vector<MultiPoly>> pw(images.size());
        for (std::size_t i = 0; i < images.size(); ++i) pw[i].push_back(constant(target, K(1)));
        MultiPoly r = constant(target, K(0));
        for (const auto& [e, c] : terms_) {
            MultiPoly m = constant(target, c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                auto& cache = pw[i];
                while (cache.size() <= e[i]) cache.push_back(cache.back() * images[i]);
                m = m * cache[e[i]];
            }
            r += m;
        }
        return r;
    }

    /// Substitute by variable name. Variables not in the map are sent to the variable of
    /// the same name in the target ring; missing names are an error.
    MultiPoly subst(const std::map<std::string, MultiPoly>& images, const VarSetPtr& target) const
    {
        std::vector<MultiPoly> im;
        for (std::size_t i = 0; i < nvars(); ++i) {
            const std::string& n = vars_->name(i);
            auto it = images.find(n);
            if (it != images.end()) {
                if (it->second.vars_ && !same_vars(it->second.vars_, target))
                    throw std::invalid_argument("poly_subst: image of " + n + " is in a different ring");
                im.push_back(it->second.is_constant() ? constant(target, it->second.constant_term()) : it->second);
            } else if (target && target->find(n)) {
                im.push_back(var(target, n));
            } else {
                throw std::invalid_argument("poly_subst: no image for variable " + n);
            }
        }
        MultiPoly r = subst(im);
        if (!r.vars_) r = r.change_ring(target);
        return r;
    }

    /// Re-express in another ring by matching variable names.
    MultiPoly change_ring(const VarSetPtr& target) const
    {
        std::size_t m = target ? target->size() : 0;
        std::vector<std::size_t> map(nvars());
        for (std::size_t i = 0; i < nvars(); ++i) {
            auto j = target ? target->find(vars_->name(i)) : std::nullopt;
            map[i] = j ? *j : m;
        }
        MultiPoly r;
        r.vars_ = target;
        for (const auto& [e, c] : terms_) {
            Exponent f(m, 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                if (map[i] == m) throw std::invalid_argument("change_ring: variable " + vars_->name(i) + " not in target ring");
                f[map[i]] = e[i];
            }
            r.add_term(f, c);
        }
        return r;
    }

    template <class K2, class Fn>
    MultiPoly<K2> map_coeffs(Fn&& fn) const
    {
        std::vector<std::pair<Exponent, K2>> ts;
        for (const auto& [e, c] : terms_) ts.emplace_back(e, fn(c));
        return MultiPoly<K2>::from_terms(vars_, ts);
    }

    /// Coefficients with respect to one variable: f = sum_k out[k] * v^k.
    std::vector<MultiPoly> coeffs_in(std::size_t v) const
    {
        int d = degree(v);
        std::vector<MultiPoly> out(d < 0 ? 0 : d + 1, empty_like());
        for (const auto& [e, c] : terms_) {
            Exponent f = e;
            f[v] = 0;
            out[e[v]].add_term(f, c);
        }
        return out;
    }
    std::vector<MultiPoly> coeffs_in(std::string_view n) const { return coeffs_in(ring_index(n)); }

    /// Multivariate division by a single polynomial in lex order: *this = q*g + r.
    std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly& g) const
    {
        if (g.is_zero()) throw std::domain_error("MultiPoly: division by zero polynomial");
        VarSetPtr vs = common_ring(*this, g);
        MultiPoly p = lifted(vs), gg = g.lifted(vs);
        MultiPoly q = constant(vs, K(0)), r = constant(vs, K(0));
        auto [lg, lc] = gg.leading_term();
        while (!p.is_zero()) {
            auto [lp, pc] = p.leading_term();
            bool divides = true;
            for (std::size_t i = 0; i < lp.size(); ++i)
                if (lp[i] < lg[i]) { divides = false; break; }
            if (divides) {
                Exponent d(lp.size());
                for (std::size_t i = 0; i < lp.size(); ++i) d[i] = static_cast<std::uint16_t>(lp[i] - lg[i]);
                MultiPoly t = monomial(vs, d, pc / lc);
                q += t;
                p -= t * gg;
            } else {
                r.add_term(lp, pc);
                p.terms_.erase(std::prev(p.terms_.end()));
            }
        }
        return {q, r};
    }

    std::optional<MultiPoly> exact_div(const MultiPoly& g) const
    {
        auto [q, r] = divmod(g);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }

    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
            if (neg) cs.erase(0, 1);
            bool compound = cs.find_first_of("+-", 1) != std::string::npos;
            if (compound) cs = "(" + cs + ")";
            if (first) os << (neg ? "-" : "");
            else os << (neg ? " - " : " + ");
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_->name(i);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) os << cs;
            else if (cs == "1") os << mono;
            else os << cs << "*" << mono;
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

    /// The same polynomial viewed in ring vs (only valid for constants or the same ring).
    MultiPoly lifted(const VarSetPtr& vs) const
    {
        if (same_vars(vars_, vs)) return *this;
        if (!is_constant() && vars_) throw std::invalid_argument("MultiPoly: ring mismatch");
        return constant(vs, constant_term());
    }

private:
    template <Field>
    friend class MultiPoly;

    std::size_t ring_index(std::string_view n) const
    {
        if (!vars_) throw std::invalid_argument("MultiPoly: constant has no variable " + std::string(n));
        return vars_->index(n);
    }

    MultiPoly empty_like() const
    {
        MultiPoly r;
        r.vars_ = vars_;
        return r;
    }

    void add_term(const Exponent& e, const K& c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static VarSetPtr common_ring(const MultiPoly& a, const MultiPoly& b)
    {
        if (!a.vars_) return b.vars_;
        if (!b.vars_) return a.vars_;
        if (!same_vars(a.vars_, b.vars_)) {
            // a constant may live in any ring
            if (a.is_constant() && a.vars_->size() == 0) return b.vars_;
            if (b.is_constant() && b.vars_->size() == 0) return a.vars_;
            throw std::invalid_argument("MultiPoly: ring mismatch");
        }
        return a.vars_;
    }

    void adopt_ring(const MultiPoly& o)
    {
        VarSetPtr vs = common_ring(*this, o);
        if (!same_vars(vars_, vs)) *this = lifted(vs);
    }

    VarSetPtr vars_;
    Terms terms_;
};

/// Free-function form of substitution: every variable of f must receive an image.
template <Field K>
MultiPoly<K> poly_subst(const MultiPoly<K>& f, const std::vector<MultiPoly<K>>& images)
{
    return f.subst(images);
}

/// Pseudo-remainder of f by g with respect to variable v: lc(g)^k * f = q*g + r with deg_v r < deg_v g.
template <Field K>
MultiPoly<K> pseudo_remainder(const MultiPoly<K>& f, const MultiPoly<K>& g, std::size_t v)
{
    int dg = g.degree(v);
    if (dg < 0) throw std::domain_error("pseudo_remainder: zero divisor");
    auto gc = g.coeffs_in(v);
    const MultiPoly<K>& lc = gc.back();
    MultiPoly<K> r = f;
    const VarSetPtr& vs = g.vars();
    while (!r.is_zero() && r.degree(v) >= dg) {
        int dr = r.degree(v);
        MultiPoly<K> lr = r.coeffs_in(v).back();
        Exponent e(vs->size(), 0);
        e[v] = static_cast<std::uint16_t>(dr - dg);
        r = lc * r - lr * MultiPoly<K>::monomial(vs, e, K(1)) * g;
    }
    return r;
}

/// Exact equality of two polynomials in one ring.
template <Field K>
bool verify_identity(const MultiPoly<K>& lhs, const MultiPoly<K>& rhs)
{
    if (lhs.vars() && rhs.vars() && !same_vars(lhs.vars(), rhs.vars()))
        throw std::invalid_argument("verify_identity: ring mismatch");
    return (lhs - rhs).is_zero();
}

/// Ratio c with a = c*b when the two polynomials are proportional.
template <Field K>
std::optional<K> proportionality(const MultiPoly<K>& a, const MultiPoly<K>& b)
{
    if (b.is_zero()) return std::nullopt;
    auto [e, cb] = b.leading_term();
    K c = a.coeff(e) / cb;
    if (!verify_identity(a, c * b)) return std::nullopt;
    return c;
}

}  // namespace desmic

#endif
