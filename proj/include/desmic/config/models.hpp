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

#ifndef DESMIC_CONFIG_MODELS_HPP
#define DESMIC_CONFIG_MODELS_HPP

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "desmic/arith/f4.hpp"
#include "desmic/arith/matrix.hpp"
#include "desmic/arith/rational.hpp"
#include "desmic/complex/tables.hpp"
#include "desmic/config/abstract_config.hpp"
#include "desmic/config/curve_system.hpp"
#include "desmic/config/perm.hpp"
#include "desmic/config/s4.hpp"
#include "desmic/geom/proj.hpp"
#include "desmic/surface/desmic_surface.hpp"

namespace desmic {

/// Reye configuration in its cube model: the 8 vertices (+-1,+-1,+-1), the center and the
/// 3 points at infinity of the axes; lines are the collinear triples (12 edges, 4 diagonals).
inline AbstractConfig reye_config()
{
    std::vector<ProjPoint<Rational>> pts;
    for (int a : {1, -1})
        for (int b : {1, -1})
            for (int c : {1, -1}) pts.push_back(ProjPoint<Rational>({a, b, c, 1}));
    pts.push_back(ProjPoint<Rational>({0, 0, 0, 1}));
    pts.push_back(ProjPoint<Rational>({1, 0, 0, 0}));
    pts.push_back(ProjPoint<Rational>({0, 1, 0, 0}));
    pts.push_back(ProjPoint<Rational>({0, 0, 1, 0}));
    std::vector<std::string> pl, bl;
    for (const auto& p : pts) pl.push_back(p.str());
    std::vector<std::vector<int>> lines;
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                auto m = Matrix<Rational>::from_rows({pts[i].coords(), pts[j].coords(), pts[k].coords()});
                if (m.rank() == 2) {
                    lines.push_back({i, j, k});
                    bl.push_back(pl[i] + pl[j] + pl[k]);
                }
            }
    return AbstractConfig(pl, bl, lines);
}

/// Nodes versus lines of the desmic quartics.
inline AbstractConfig desmic_config()
{
    auto nodes = desmic_nodes<Rational>();
    auto lines = desmic_lines<Rational>();
    std::vector<LineP3<Rational>> ls;
    std::vector<std::string> pl, bl;
    for (const auto& p : nodes) pl.push_back(p.str());
    for (const auto& l : lines) {
        ls.push_back(l.line);
        bl.push_back(l.name);
    }
    return AbstractConfig(pl, bl, line_point_incidence(ls, nodes));
}

/// Points and blocks taken from two families of curves; incidence is a nonzero intersection number.
inline AbstractConfig config_from_curves(const CurveSystem& cs, const std::vector<std::string>& points,
                                         const std::vector<std::string>& blocks)
{
    std::vector<std::vector<int>> inc;
    for (const auto& b : blocks) {
        std::vector<int> on;
        for (std::size_t p = 0; p < points.size(); ++p)
            if (cs.intersection(points[p], b) != 0) on.push_back(static_cast<int>(p));
        inc.push_back(on);
    }
    return AbstractConfig(points, blocks, inc);
}

/// The twelve curves E_i, E^i, D_i against the sixteen E_ij of the Kummer curve system.
inline AbstractConfig kummer_config(const CurveSystem& cs)
{
    std::vector<std::string> points, blocks;
    for (const char* f : {"E", "E^", "D"})
        for (int i = 0; i < 4; ++i) points.push_back(f + std::to_string(i));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) blocks.push_back("E" + std::to_string(i) + std::to_string(j));
    return config_from_curves(cs, points, blocks);
}

/// Elements of S_4 against the 18 cosets H_i g of the three subgroups H_i.
inline AbstractConfig coset_config()
{
    auto elems = all_perms(4);
    auto hs = coset_subgroups();
    std::vector<std::string> pl, bl;
    for (const auto& g : elems) pl.push_back(g.str());
    std::vector<std::vector<int>> blocks;
    std::vector<std::set<Perm>> seen;
    for (int i = 0; i < 3; ++i)
        for (const auto& g : elems) {
            std::set<Perm> c;
            for (const auto& h : hs[i]) c.insert(h * g);
            if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
            seen.push_back(c);
            std::vector<int> idx;
            std::string label = "H" + std::to_string(i + 1) + "{";
            for (const auto& x : c) {
                idx.push_back(static_cast<int>(std::find(elems.begin(), elems.end(), x) - elems.begin()));
                label += (label.back() == '{' ? "" : ",") + x.str();
            }
            blocks.push_back(idx);
            bl.push_back(label + "}");
        }
    return AbstractConfig(pl, bl, blocks);
}

/// Determinant monomials a_{1g(1)}...a_{4g(4)} against the 16 matrix cells. Block k is the cell
/// carrying label k+1 in the printed 4x4 label matrix.
inline AbstractConfig determinant_config()
{
    auto elems = all_perms(4);
    auto labels = determinant_label_matrix();
    std::vector<std::string> pl, bl(16);
    std::vector<std::vector<int>> blocks(16);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) bl[labels[r][c] - 1] = "a" + std::to_string(r + 1) + std::to_string(c + 1);
    for (std::size_t k = 0; k < elems.size(); ++k) {
        pl.push_back(elems[k].str());
        for (int r = 0; r < 4; ++r) blocks[labels[r][elems[k](r)] - 1].push_back(static_cast<int>(k));
    }
    return AbstractConfig(pl, bl, blocks);
}

/// All points of P^2(F_4), normalized so the first nonzero coordinate is 1.
inline std::vector<std::array<F4, 3>> pg24_points()
{
    std::vector<std::array<F4, 3>> out;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                std::array<F4, 3> v{F4::element(a), F4::element(b), F4::element(c)};
                F4 lead = !v[0].is_zero() ? v[0] : (!v[1].is_zero() ? v[1] : v[2]);
                if (lead == F4(1)) out.push_back(v);
            }
    return out;
}

inline std::string f4_str(F4 x)
{
    static const char* names[4] = {"0", "1", "w", "w^2"};
    for (int k = 0; k < 4; ++k)
        if (F4::element(k) == x) return names[k];
    return "?";
}

inline std::string pg24_str(const std::array<F4, 3>& v) { return "(" + f4_str(v[0]) + ":" + f4_str(v[1]) + ":" + f4_str(v[2]) + ")"; }

inline bool pg24_incident(const std::array<F4, 3>& pt, const std::array<F4, 3>& line)
{
    return (pt[0] * line[0] + pt[1] * line[1] + pt[2] * line[2]).is_zero();
}

/// Points against lines of the projective plane over F_4.
inline AbstractConfig pg24()
{
    auto pts = pg24_points();
    std::vector<std::string> pl, bl;
    std::vector<std::vector<int>> blocks;
    for (const auto& p : pts) pl.push_back(pg24_str(p));
    for (const auto& l : pts) {
        bl.push_back("V" + pg24_str(l));
        std::vector<int> on;
        for (std::size_t k = 0; k < pts.size(); ++k)
            if (pg24_incident(pts[k], l)) on.push_back(static_cast<int>(k));
        blocks.push_back(on);
    }
    return AbstractConfig(pl, bl, blocks);
}

}  // namespace desmic

#endif
