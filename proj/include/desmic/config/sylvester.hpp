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

#ifndef DESMIC_CONFIG_SYLVESTER_HPP
#define DESMIC_CONFIG_SYLVESTER_HPP

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "desmic/arith/f4.hpp"
#include "desmic/config/abstract_config.hpp"
#include "desmic/config/curve_system.hpp"
#include "desmic/config/models.hpp"

namespace desmic {

/// The totals table as printed: entry (k, l) is the syntheme shared by T_k and T_l.
inline const std::array<std::array<const char*, 6>, 6>& printed_totals_table()
{
    static const std::array<std::array<const char*, 6>, 6> t = {{
        {"", "14.25.36", "16.24.35", "13.26.45", "12.34.56", "15.23.46"},
        {"14.25.36", "", "15.26.34", "12.35.46", "16.23.45", "13.24.56"},
        {"16.24.35", "15.26.34", "", "14.23.56", "13.25.46", "12.36.45"},
        {"13.26.45", "12.35.46", "14.23.56", "", "15.24.36", "16.25.34"},
        {"12.34.56", "16.23.45", "13.25.46", "15.24.36", "", "14.26.35"},
        {"15.23.46", "13.24.56", "12.36.45", "16.25.34", "14.26.35", ""},
    }};
    return t;
}

/// Duads, synthemes and totals on the letters 1..6.
struct SylvesterSystem {
    std::vector<std::array<int, 2>> duads;      // letters 1..6, increasing
    std::vector<std::array<int, 3>> synthemes;  // duad indices, increasing
    std::vector<std::array<int, 5>> totals;     // syntheme indices, increasing; T_1..T_6

    std::string duad_label(int d) const { return std::to_string(duads.at(d)[0]) + std::to_string(duads.at(d)[1]); }
    std::string syntheme_label(int s) const
    {
        const auto& t = synthemes.at(s);
        return duad_label(t[0]) + "." + duad_label(t[1]) + "." + duad_label(t[2]);
    }
    static std::string total_label(int k) { return "T" + std::to_string(k + 1); }

    int duad_index(int a, int b) const
    {
        if (a > b) std::swap(a, b);
        for (std::size_t d = 0; d < duads.size(); ++d)
            if (duads[d][0] == a && duads[d][1] == b) return static_cast<int>(d);
        throw std::out_of_range("SylvesterSystem: no duad");
    }
    int syntheme_index(const std::string& label) const
    {
        for (std::size_t s = 0; s < synthemes.size(); ++s)
            if (syntheme_label(static_cast<int>(s)) == label) return static_cast<int>(s);
        throw std::out_of_range("SylvesterSystem: no syntheme " + label);
    }
    /// Synthemes common to T_k and T_l.
    std::vector<int> common(int k, int l) const
    {
        std::vector<int> out;
        std::set_intersection(totals.at(k).begin(), totals.at(k).end(), totals.at(l).begin(), totals.at(l).end(),
                              std::back_inserter(out));
        return out;
    }
    /// Duad-syntheme incidence: synthemes as points, duads as blocks.
    AbstractConfig duad_syntheme_config() const
    {
        std::vector<std::string> pl, bl;
        std::vector<std::vector<int>> blocks(duads.size());
        for (std::size_t s = 0; s < synthemes.size(); ++s) {
            pl.push_back(syntheme_label(static_cast<int>(s)));
            for (int d : synthemes[s]) blocks[d].push_back(static_cast<int>(s));
        }
        for (std::size_t d = 0; d < duads.size(); ++d) bl.push_back(duad_label(static_cast<int>(d)));
        return AbstractConfig(pl, bl, blocks);
    }
};

/// Enumerates duads, synthemes (three disjoint duads) and totals (five synthemes with pairwise
/// disjoint duads). The totals are numbered by matching the syntheme sets of the printed rows;
/// throws if a printed row is not a total.
inline SylvesterSystem duad_syntheme_system()
{
    SylvesterSystem sys;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b) sys.duads.push_back({a, b});
    const int nd = static_cast<int>(sys.duads.size());
    auto disjoint = [&](int d, int e) {
        const auto& x = sys.duads[d];
        const auto& y = sys.duads[e];
        return x[0] != y[0] && x[0] != y[1] && x[1] != y[0] && x[1] != y[1];
    };
    for (int d = 0; d < nd; ++d)
        for (int e = d + 1; e < nd; ++e)
            for (int f = e + 1; f < nd; ++f)
                if (disjoint(d, e) && disjoint(d, f) && disjoint(e, f)) sys.synthemes.push_back({d, e, f});
    const int ns = static_cast<int>(sys.synthemes.size());
    auto share = [&](int s, int t) {
        for (int d : sys.synthemes[s])
            for (int e : sys.synthemes[t])
                if (d == e) return true;
        return false;
    };
    std::vector<std::array<int, 5>> found;
    std::array<int, 5> cur{};
    auto rec = [&](auto&& self, int depth, int start) -> void {
        if (depth == 5) {
            found.push_back(cur);
            return;
        }
        for (int s = start; s < ns; ++s) {
            bool ok = true;
            for (int k = 0; k < depth && ok; ++k) ok = !share(cur[k], s);
            if (!ok) continue;
            cur[depth] = s;
            self(self, depth + 1, s + 1);
        }
    };
    rec(rec, 0, 0);

    const auto& printed = printed_totals_table();
    for (int k = 0; k < 6; ++k) {
        std::vector<int> row;
        for (int l = 0; l < 6; ++l)
            if (l != k) row.push_back(sys.syntheme_index(printed[k][l]));
        std::sort(row.begin(), row.end());
        auto it = std::find_if(found.begin(), found.end(),
                               [&](const auto& t) { return std::equal(t.begin(), t.end(), row.begin(), row.end()); });
        if (it == found.end()) throw std::runtime_error("duad_syntheme_system: printed row T" + std::to_string(k + 1) + " is not a total");
        sys.totals.push_back(*it);
    }
    if (found.size() != 6) throw std::runtime_error("duad_syntheme_system: expected six totals, found " + std::to_string(found.size()));
    return sys;
}

/// Number of totals in the enumeration (independent of the printed numbering).
inline int count_totals(const SylvesterSystem& sys)
{
    std::set<std::array<int, 5>> s(sys.totals.begin(), sys.totals.end());
    return static_cast<int>(s.size());
}

namespace detail {

inline std::string render_table(const std::array<std::array<std::string, 6>, 6>& cells)
{
    std::string out = "  ";
    for (int l = 0; l < 6; ++l) out += " " + SylvesterSystem::total_label(l) + std::string(7, ' ');
    out += "\n";
    for (int k = 0; k < 6; ++k) {
        out += SylvesterSystem::total_label(k);
        for (int l = 0; l < 6; ++l) {
            std::string c = cells[k][l].empty() ? "-" : cells[k][l];
            out += " " + c + std::string(c.size() < 8 ? 8 - c.size() : 0, ' ');
        }
        out += "\n";
    }
    return out;
}

}  // namespace detail

/// Text rendering of the totals table computed from the enumerated totals.
inline std::string render_totals_table(const SylvesterSystem& sys)
{
    std::array<std::array<std::string, 6>, 6> cells;
    for (int k = 0; k < 6; ++k)
        for (int l = 0; l < 6; ++l) {
            if (k == l) continue;
            auto c = sys.common(k, l);
            cells[k][l] = c.size() == 1 ? sys.syntheme_label(c[0]) : "?";
        }
    return detail::render_table(cells);
}

/// The printed table in the same rendering.
inline std::string render_printed_totals_table()
{
    std::array<std::array<std::string, 6>, 6> cells;
    for (int k = 0; k < 6; ++k)
        for (int l = 0; l < 6; ++l) cells[k][l] = printed_totals_table()[k][l];
    return detail::render_table(cells);
}

/// The fixed 6-arc of P^2(F_4), in the order labeled 1..6.
inline std::vector<std::array<F4, 3>> six_arc()
{
    const F4 w = F4::omega(), w2 = w * w;
    return {{F4(1), F4(0), F4(0)}, {F4(0), F4(1), F4(0)}, {F4(0), F4(0), F4(1)},
            {F4(1), F4(1), F4(1)}, {F4(1), w, w2},        {F4(1), w2, w}};
}

inline F4 det3(const std::array<F4, 3>& a, const std::array<F4, 3>& b, const std::array<F4, 3>& c)
{
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

inline bool in_general_position(const std::vector<std::array<F4, 3>>& pts)
{
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (det3(pts[i], pts[j], pts[k]).is_zero()) return false;
    return true;
}

/// Labels of the points and lines of P^2(F_4) by letters, synthemes, duads and totals.
struct Pg24Labeling {
    std::vector<std::string> point_labels, line_labels;  // indexed like pg24_points()
};

inline Pg24Labeling label_pg24(const SylvesterSystem& sys)
{
    auto pts = pg24_points();
    auto arc = six_arc();
    if (!in_general_position(arc)) throw std::runtime_error("label_pg24: 6-arc not in general position");
    auto normalize = [](std::array<F4, 3> v) {
        F4 lead = !v[0].is_zero() ? v[0] : (!v[1].is_zero() ? v[1] : v[2]);
        for (auto& x : v) x = x / lead;
        return v;
    };
    auto letter = [&](const std::array<F4, 3>& p) {
        for (std::size_t a = 0; a < arc.size(); ++a)
            if (normalize(arc[a]) == p) return static_cast<int>(a) + 1;
        return 0;
    };
    auto arc_on = [&](const std::array<F4, 3>& line) {
        std::vector<int> on;
        for (std::size_t a = 0; a < arc.size(); ++a)
            if (pg24_incident(arc[a], line)) on.push_back(static_cast<int>(a) + 1);
        return on;
    };
    Pg24Labeling lab;
    std::vector<int> point_syntheme(pts.size(), -1);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (int a = letter(pts[k])) {
            lab.point_labels.push_back(std::to_string(a));
            continue;
        }
        // secants through a point off the arc split the six letters into a syntheme
        std::vector<int> ds;
        for (const auto& l : pts)
            if (pg24_incident(pts[k], l)) {
                auto on = arc_on(l);
                if (on.size() == 2) ds.push_back(sys.duad_index(on[0], on[1]));
                else if (!on.empty()) throw std::runtime_error("label_pg24: line meets the arc in one point");
            }
        std::sort(ds.begin(), ds.end());
        if (ds.size() != 3) throw std::runtime_error("label_pg24: expected three secants through a point");
        auto it = std::find(sys.synthemes.begin(), sys.synthemes.end(), std::array<int, 3>{ds[0], ds[1], ds[2]});
        if (it == sys.synthemes.end()) throw std::runtime_error("label_pg24: secants through a point are not a syntheme");
        point_syntheme[k] = static_cast<int>(it - sys.synthemes.begin());
        lab.point_labels.push_back(sys.syntheme_label(point_syntheme[k]));
    }
    for (const auto& l : pts) {
        auto on = arc_on(l);
        if (on.size() == 2) {
            lab.line_labels.push_back(sys.duad_label(sys.duad_index(on[0], on[1])));
            continue;
        }
        if (!on.empty()) throw std::runtime_error("label_pg24: line meets the arc in one point");
        std::vector<int> ss;
        for (std::size_t k = 0; k < pts.size(); ++k)
            if (pg24_incident(pts[k], l)) ss.push_back(point_syntheme[k]);
        std::sort(ss.begin(), ss.end());
        int found = -1;
        for (std::size_t t = 0; t < sys.totals.size(); ++t)
            if (std::equal(ss.begin(), ss.end(), sys.totals[t].begin(), sys.totals[t].end())) found = static_cast<int>(t);
        if (found < 0) throw std::runtime_error("label_pg24: points of an exterior line are not a total");
        lab.line_labels.push_back(SylvesterSystem::total_label(found));
    }
    return lab;
}

/// The 42 (-2)-curves over the points and lines of P^2(F_4): an exceptional curve meets a line
/// transform exactly when the point lies on the line; curves of the same family are disjoint.
/// Curves are ordered 1..6, synthemes, duads, T1..T6.
inline CurveSystem label_42_curves()
{
    auto sys = duad_syntheme_system();
    auto lab = label_pg24(sys);
    auto pts = pg24_points();
    std::vector<std::string> point_ids, line_ids;
    for (int a = 1; a <= 6; ++a) point_ids.push_back(std::to_string(a));
    for (std::size_t s = 0; s < sys.synthemes.size(); ++s) point_ids.push_back(sys.syntheme_label(static_cast<int>(s)));
    for (std::size_t d = 0; d < sys.duads.size(); ++d) line_ids.push_back(sys.duad_label(static_cast<int>(d)));
    for (int t = 0; t < 6; ++t) line_ids.push_back(SylvesterSystem::total_label(t));
    CurveSystem cs;
    for (const auto& id : point_ids) cs.add_curve(id, -2);
    for (const auto& id : line_ids) cs.add_curve(id, -2);
    for (std::size_t p = 0; p < pts.size(); ++p)
        for (std::size_t l = 0; l < pts.size(); ++l)
            if (pg24_incident(pts[p], pts[l])) cs.set_intersection(lab.point_labels[p], lab.line_labels[l], 1);
    return cs;
}

/// One column of a printed fiber table: the central curve and four simple components.
struct PrintedFiber {
    const char* central;
    std::array<const char*, 4> leaves;
};

inline const std::array<std::array<PrintedFiber, 5>, 3>& printed_fiber_tables()
{
    static const std::array<std::array<PrintedFiber, 5>, 3> t = {{
        {{{"12", {"12.35.46", "12.34.56", "12.36.45", "2"}},
          {"13", {"13.25.46", "13.24.56", "3", "13.26.45"}},
          {"14", {"4", "14.23.56", "14.25.36", "14.26.35"}},
          {"15", {"15.23.46", "5", "15.24.36", "15.26.34"}},
          {"16", {"6", "16.23.45", "16.24.35", "16.25.34"}}}},
        {{{"26", {"2", "13.26.45", "14.26.35", "15.26.34"}},
          {"36", {"12.36.45", "3", "14.25.36", "15.24.36"}},
          {"46", {"12.35.46", "13.25.46", "4", "15.23.46"}},
          {"56", {"12.34.56", "13.24.56", "14.23.56", "5"}},
          {"16", {"1", "16.23.45", "16.24.35", "16.25.34"}}}},
        {{{"23", {"2", "3", "14.23.56", "15.23.46"}},
          {"45", {"4", "5", "12.36.45", "13.26.45"}},
          {"T2", {"12.35.46", "13.24.56", "14.25.36", "15.26.34"}},
          {"T5", {"12.34.56", "13.25.46", "14.26.35", "15.24.36"}},
          {"16", {"1", "6", "16.24.35", "16.25.34"}}}},
    }};
    return t;
}

struct FibrationTablesReport {
    std::vector<Fibration> fibrations;     // f1, f2, f3
    std::vector<std::string> failures;     // adjacency or invariant mismatches
    std::vector<std::string> common;       // simple components shared by the first four fibers of all three
    bool ok() const { return failures.empty() && common.size() == 16; }
};

/// Checks every printed column against the 42-curve matrix: the central curve meets each of the
/// four others once, those are pairwise disjoint, and the dual graph is D~4.
inline FibrationTablesReport fibration_tables(const CurveSystem& cs)
{
    FibrationTablesReport rep;
    const auto& tables = printed_fiber_tables();
    std::vector<std::set<std::string>> firsts;
    for (int t = 0; t < 3; ++t) {
        Fibration fib{"f" + std::to_string(t + 1), {}};
        std::set<std::string> simple;
        for (int c = 0; c < 5; ++c) {
            const auto& col = tables[t][c];
            std::string where = fib.name + " column " + col.central;
            if (!cs.has(col.central)) {
                rep.failures.push_back(where + ": unknown curve " + col.central);
                continue;
            }
            Fiber f{"D~4", {{cs.index(col.central), 2}}};
            for (const char* l : col.leaves) {
                if (!cs.has(l)) {
                    rep.failures.push_back(where + ": unknown curve " + l);
                    continue;
                }
                if (cs.intersection(col.central, l) != 1) rep.failures.push_back(where + ": central does not meet " + l);
                f.components.push_back({cs.index(l), 1});
                if (c < 4) simple.insert(l);
            }
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = a + 1; b < 4; ++b)
                    if (cs.intersection(col.leaves[a], col.leaves[b]) != 0)
                        rep.failures.push_back(where + ": " + col.leaves[a] + " meets " + col.leaves[b]);
            fib.fibers.push_back(std::move(f));
        }
        firsts.push_back(simple);
        rep.fibrations.push_back(std::move(fib));
    }
    CurveSystem with = cs;
    with.fibrations() = rep.fibrations;
    for (const auto& e : validate_curve_system(with)) rep.failures.push_back(e);
    for (const auto& id : firsts[0])
        if (firsts[1].count(id) && firsts[2].count(id)) rep.common.push_back(id);
    return rep;
}

/// The 42-curve system with the three fibrations and H = F_1 + F_2 + F_3 - 1/2 (sum of the 16 common components).
inline CurveSystem supersingular_curve_system()
{
    CurveSystem cs = label_42_curves();
    auto rep = fibration_tables(cs);
    if (!rep.ok()) throw CurveSystemError(rep.failures.empty() ? std::vector<std::string>{"common components != 16"} : rep.failures);
    cs.fibrations() = rep.fibrations;
    Divisor h{"H", {}};
    for (const auto& f : rep.fibrations) h.terms.push_back({f.name, true, Rational(1)});
    for (const auto& id : rep.common) h.terms.push_back({id, false, Rational(-1, 2)});
    cs.divisors().push_back(h);
    auto err = validate_curve_system(cs);
    if (!err.empty()) throw CurveSystemError(err);
    return cs;
}

struct Desmic28 {
    std::vector<std::string> centrals, simple;
    CurveSystem curves;
    AbstractConfig config;  // centrals as points, simple components as blocks
    std::optional<ConfigIsomorphism> reye;
};

/// Central components and common simple components of the first four fibers of each fibration.
inline Desmic28 extract_desmic_28(const CurveSystem& cs)
{
    if (cs.fibrations().size() < 3) throw std::invalid_argument("extract_desmic_28: fibrations missing");
    Desmic28 out;
    std::vector<std::set<std::string>> simple;
    for (const auto& fib : cs.fibrations()) {
        std::set<std::string> s;
        for (std::size_t k = 0; k < 4 && k < fib.fibers.size(); ++k)
            for (const auto& c : fib.fibers[k].components) {
                if (c.mult == 2) out.centrals.push_back(cs.id(c.curve));
                else s.insert(cs.id(c.curve));
            }
        simple.push_back(s);
    }
    for (const auto& id : cs.ids())
        if (std::all_of(simple.begin(), simple.end(), [&](const auto& s) { return s.count(id) > 0; })) out.simple.push_back(id);
    for (const auto& id : out.centrals) out.curves.add_curve(id, cs.intersection(id, id));
    for (const auto& id : out.simple) out.curves.add_curve(id, cs.intersection(id, id));
    for (int a = 0; a < out.curves.size(); ++a)
        for (int b = a + 1; b < out.curves.size(); ++b)
            out.curves.set_intersection(a, b, cs.intersection(out.curves.id(a), out.curves.id(b)));
    out.config = config_from_curves(cs, out.centrals, out.simple);
    out.reye = config_isomorphic(out.config, reye_config());
    if (!out.reye) throw std::runtime_error("extract_desmic_28: configuration is not the Reye configuration");
    return out;
}

}  // namespace desmic

#endif
