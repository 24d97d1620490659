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

#ifndef DESMIC_CONFIG_CURVE_SYSTEM_HPP
#define DESMIC_CONFIG_CURVE_SYSTEM_HPP

#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "desmic/arith/rational.hpp"
#include "desmic/lattice/dynkin.hpp"

namespace desmic {

struct FiberComponent {
    int curve = 0;
    long long mult = 1;
};

struct Fiber {
    std::string type;  // e.g. "D~4"
    std::vector<FiberComponent> components;
};

struct Fibration {
    std::string name;
    std::vector<Fiber> fibers;
};

/// A term refers either to a curve or, with is_class set, to the fiber class of a fibration.
struct DivisorTerm {
    std::string ref;
    bool is_class = false;
    Rational coeff;
};

struct Divisor {
    std::string name;
    std::vector<DivisorTerm> terms;
};

/// Curves with a symmetric intersection matrix, plus optional fibrations and divisors.
class CurveSystem {
public:
    int add_curve(const std::string& id, long long self)
    {
        if (index_.count(id)) throw std::invalid_argument("CurveSystem: duplicate curve " + id);
        int k = static_cast<int>(ids_.size());
        ids_.push_back(id);
        index_[id] = k;
        for (auto& row : m_) row.push_back(0);
        m_.emplace_back(ids_.size(), 0);
        m_[k][k] = self;
        return k;
    }

    void set_intersection(int a, int b, long long v)
    {
        m_.at(a).at(b) = v;
        m_.at(b).at(a) = v;
    }
    void set_intersection(const std::string& a, const std::string& b, long long v) { set_intersection(index(a), index(b), v); }

    int size() const noexcept { return static_cast<int>(ids_.size()); }
    const std::vector<std::string>& ids() const noexcept { return ids_; }
    const std::string& id(int k) const { return ids_.at(k); }
    bool has(const std::string& id) const { return index_.count(id) > 0; }
    int index(const std::string& id) const
    {
        auto it = index_.find(id);
        if (it == index_.end()) throw std::out_of_range("CurveSystem: unknown curve " + id);
        return it->second;
    }
    long long operator()(int a, int b) const { return m_.at(a).at(b); }
    long long intersection(const std::string& a, const std::string& b) const { return m_[index(a)][index(b)]; }
    const std::vector<std::vector<long long>>& matrix() const noexcept { return m_; }

    /// Intersection matrix restricted to the given curves, in that order.
    std::vector<std::vector<long long>> submatrix(const std::vector<int>& idx) const
    {
        std::vector<std::vector<long long>> s(idx.size(), std::vector<long long>(idx.size()));
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) s[i][j] = m_[idx[i]][idx[j]];
        return s;
    }

    std::vector<Fibration>& fibrations() noexcept { return fibrations_; }
    const std::vector<Fibration>& fibrations() const noexcept { return fibrations_; }
    std::vector<Divisor>& divisors() noexcept { return divisors_; }
    const std::vector<Divisor>& divisors() const noexcept { return divisors_; }

    const Fibration& fibration(const std::string& name) const
    {
        for (const auto& f : fibrations_)
            if (f.name == name) return f;
        throw std::out_of_range("CurveSystem: unknown fibration " + name);
    }
    const Divisor& divisor(const std::string& name) const
    {
        for (const auto& d : divisors_)
            if (d.name == name) return d;
        throw std::out_of_range("CurveSystem: unknown divisor " + name);
    }

    /// Coefficient vector of a fiber over the curves.
    std::vector<Rational> fiber_vector(const Fiber& f) const
    {
        std::vector<Rational> v(ids_.size());
        for (const auto& c : f.components) v.at(c.curve) += Rational(c.mult);
        return v;
    }
    /// Fiber class of a fibration, represented by its first fiber.
    std::vector<Rational> class_vector(const std::string& fibration_name) const
    {
        const auto& f = fibration(fibration_name);
        if (f.fibers.empty()) throw std::invalid_argument("CurveSystem: fibration " + fibration_name + " has no fibers");
        return fiber_vector(f.fibers.front());
    }
    std::vector<Rational> divisor_vector(const Divisor& d) const
    {
        std::vector<Rational> v(ids_.size());
        for (const auto& t : d.terms) {
            if (t.is_class) {
                auto c = class_vector(t.ref);
                for (std::size_t k = 0; k < v.size(); ++k) v[k] += t.coeff * c[k];
            } else {
                v[index(t.ref)] += t.coeff;
            }
        }
        return v;
    }
    std::vector<Rational> divisor_vector(const std::string& name) const { return divisor_vector(divisor(name)); }

    Rational pair(const std::vector<Rational>& x, const std::vector<Rational>& y) const
    {
        Rational s;
        for (std::size_t i = 0; i < ids_.size(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < ids_.size(); ++j)
                if (!y[j].is_zero() && m_[i][j] != 0) s += x[i] * y[j] * Rational(m_[i][j]);
        }
        return s;
    }
    /// x . C_k
    Rational pair_curve(const std::vector<Rational>& x, int k) const
    {
        Rational s;
        for (std::size_t i = 0; i < ids_.size(); ++i)
            if (!x[i].is_zero() && m_[i][k] != 0) s += x[i] * Rational(m_[i][k]);
        return s;
    }

private:
    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<std::vector<long long>> m_;
    std::vector<Fibration> fibrations_;
    std::vector<Divisor> divisors_;
};

/// Invariant violations, each naming the offending curve, fiber or divisor. Empty when valid.
inline std::vector<std::string> validate_curve_system(const CurveSystem& cs)
{
    std::vector<std::string> err;
    for (int a = 0; a < cs.size(); ++a)
        for (int b = a + 1; b < cs.size(); ++b)
            if (cs(a, b) < 0) err.push_back("negative intersection " + cs.id(a) + "." + cs.id(b));
    for (const auto& fib : cs.fibrations()) {
        std::vector<std::vector<Rational>> vs;
        for (std::size_t k = 0; k < fib.fibers.size(); ++k) {
            const auto& f = fib.fibers[k];
            std::string where = fib.name + " fiber " + std::to_string(k + 1);
            auto v = cs.fiber_vector(f);
            vs.push_back(v);
            if (!cs.pair(v, v).is_zero()) err.push_back(where + ": F^2 = " + cs.pair(v, v).str());
            std::vector<int> idx;
            for (const auto& c : f.components) {
                if (c.mult <= 0) err.push_back(where + ": non-positive multiplicity of " + cs.id(c.curve));
                if (!cs.pair_curve(v, c.curve).is_zero())
                    err.push_back(where + ": F." + cs.id(c.curve) + " = " + cs.pair_curve(v, c.curve).str());
                idx.push_back(c.curve);
            }
            try {
                auto t = dynkin_str(classify_dynkin(cs.submatrix(idx)));
                if (t != f.type) err.push_back(where + ": declared " + f.type + ", dual graph is " + t);
            } catch (const std::exception& e) {
                err.push_back(where + ": " + e.what());
            }
        }
        // fibers of one fibration are numerically equivalent
        for (std::size_t k = 1; k < vs.size(); ++k)
            for (int c = 0; c < cs.size(); ++c)
                if (cs.pair_curve(vs[k], c) != cs.pair_curve(vs[0], c)) {
                    err.push_back(fib.name + " fiber " + std::to_string(k + 1) + " not equivalent to fiber 1 on " + cs.id(c));
                    break;
                }
    }
    for (const auto& d : cs.divisors()) {
        std::vector<Rational> v;
        try {
            v = cs.divisor_vector(d);
        } catch (const std::exception& e) {
            err.push_back("divisor " + d.name + ": " + e.what());
            continue;
        }
        for (int c = 0; c < cs.size(); ++c)
            if (!cs.pair_curve(v, c).is_integer())
                err.push_back("divisor " + d.name + ": non-integral pairing with " + cs.id(c));
        if (!cs.pair(v, v).is_integer()) err.push_back("divisor " + d.name + ": non-integral square");
    }
    return err;
}

class CurveSystemError : public std::runtime_error {
public:
    explicit CurveSystemError(const std::vector<std::string>& diagnostics)
        : std::runtime_error(join(diagnostics)), diagnostics_(diagnostics)
    {
    }
    const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

private:
    static std::string join(const std::vector<std::string>& d)
    {
        std::string s = "invalid curve system";
        for (const auto& x : d) s += "; " + x;
        return s;
    }
    std::vector<std::string> diagnostics_;
};

/// Parses and validates a curve system in the JSON exchange format.
inline CurveSystem ingest_curve_system(const nlohmann::json& j)
{
    std::vector<std::string> err;
    auto fail = [&](const std::string& m) { throw CurveSystemError({m}); };
    if (!j.is_object() || !j.contains("curves") || !j["curves"].is_array()) fail("schema: missing \"curves\" array");
    CurveSystem cs;
    for (const auto& c : j["curves"]) {
        if (!c.is_object() || !c.contains("id") || !c["id"].is_string() || !c.contains("self") || !c["self"].is_number_integer())
            fail("schema: curve entries need string \"id\" and integer \"self\"");
        try {
            cs.add_curve(c["id"].get<std::string>(), c["self"].get<long long>());
        } catch (const std::exception& e) {
            fail(std::string("schema: ") + e.what());
        }
    }
    auto curve = [&](const nlohmann::json& v) {
        if (!v.is_string()) fail("schema: curve reference must be a string");
        auto id = v.get<std::string>();
        if (!cs.has(id)) fail("schema: unknown curve " + id);
        return cs.index(id);
    };
    std::map<std::pair<int, int>, long long> seen;
    for (const auto& e : j.value("intersections", nlohmann::json::array())) {
        if (!e.is_array() || e.size() != 3 || !e[2].is_number_integer()) fail("schema: intersections are [idA, idB, int]");
        int a = curve(e[0]), b = curve(e[1]);
        long long v = e[2].get<long long>();
        if (a == b) fail("schema: self-intersection of " + cs.id(a) + " belongs in \"self\"");
        auto key = std::minmax(a, b);
        auto it = seen.find(key);
        if (it != seen.end() && it->second != v) fail("schema: conflicting entries for " + cs.id(a) + "." + cs.id(b));
        seen[key] = v;
        cs.set_intersection(a, b, v);
    }
    for (const auto& f : j.value("fibrations", nlohmann::json::array())) {
        if (!f.is_object() || !f.contains("name") || !f["name"].is_string() || !f.contains("fibers") || !f["fibers"].is_array())
            fail("schema: fibrations need \"name\" and \"fibers\"");
        Fibration fib{f["name"].get<std::string>(), {}};
        for (const auto& fb : f["fibers"]) {
            if (!fb.is_object() || !fb.contains("type") || !fb["type"].is_string() || !fb.contains("components"))
                fail("schema: fibers need \"type\" and \"components\"");
            Fiber fiber{fb["type"].get<std::string>(), {}};
            for (const auto& c : fb["components"]) {
                if (!c.is_object() || !c.contains("id") || !c.contains("mult") || !c["mult"].is_number_integer())
                    fail("schema: components need \"id\" and integer \"mult\"");
                fiber.components.push_back({curve(c["id"]), c["mult"].get<long long>()});
            }
            fib.fibers.push_back(std::move(fiber));
        }
        cs.fibrations().push_back(std::move(fib));
    }
    for (const auto& d : j.value("divisors", nlohmann::json::array())) {
        if (!d.is_object() || !d.contains("name") || !d["name"].is_string() || !d.contains("terms"))
            fail("schema: divisors need \"name\" and \"terms\"");
        Divisor div{d["name"].get<std::string>(), {}};
        for (const auto& t : d["terms"]) {
            if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string() || (t.contains("id") == t.contains("class")))
                fail("schema: divisor terms need exactly one of \"id\"/\"class\" and a string \"coeff\"");
            DivisorTerm term;
            term.is_class = t.contains("class");
            term.ref = (term.is_class ? t["class"] : t["id"]).get<std::string>();
            if (!term.is_class && !cs.has(term.ref)) fail("schema: unknown curve " + term.ref + " in divisor " + div.name);
            try {
                term.coeff = Rational::parse(t["coeff"].get<std::string>());
            } catch (const std::exception&) {
                fail("schema: bad coefficient in divisor " + div.name);
            }
            div.terms.push_back(term);
        }
        cs.divisors().push_back(std::move(div));
    }
    err = validate_curve_system(cs);
    if (!err.empty()) throw CurveSystemError(err);
    return cs;
}

inline CurveSystem load_curve_system(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw CurveSystemError({"schema: " + std::string(e.what())});
    }
    return ingest_curve_system(j);
}

inline nlohmann::json to_json(const CurveSystem& cs)
{
    using nlohmann::json;
    json j;
    j["curves"] = json::array();
    for (int k = 0; k < cs.size(); ++k) j["curves"].push_back({{"id", cs.id(k)}, {"self", cs(k, k)}});
    j["intersections"] = json::array();
    for (int a = 0; a < cs.size(); ++a)
        for (int b = a + 1; b < cs.size(); ++b)
            if (cs(a, b) != 0) j["intersections"].push_back(json::array({cs.id(a), cs.id(b), cs(a, b)}));
    j["fibrations"] = json::array();
    for (const auto& f : cs.fibrations()) {
        json fj{{"name", f.name}, {"fibers", json::array()}};
        for (const auto& fb : f.fibers) {
            json comps = json::array();
            for (const auto& c : fb.components) comps.push_back({{"id", cs.id(c.curve)}, {"mult", c.mult}});
            fj["fibers"].push_back({{"type", fb.type}, {"components", comps}});
        }
        j["fibrations"].push_back(fj);
    }
    j["divisors"] = json::array();
    for (const auto& d : cs.divisors()) {
        json terms = json::array();
        for (const auto& t : d.terms) terms.push_back({{t.is_class ? "class" : "id", t.ref}, {"coeff", t.coeff.str()}});
        j["divisors"].push_back({{"name", d.name}, {"terms", terms}});
    }
    return j;
}

}  // namespace desmic

#endif
