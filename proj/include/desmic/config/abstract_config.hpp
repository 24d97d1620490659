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

#ifndef DESMIC_CONFIG_ABSTRACT_CONFIG_HPP
#define DESMIC_CONFIG_ABSTRACT_CONFIG_HPP

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace desmic {

/// Type (a_c, b_d): a points each on c blocks, b blocks each with d points.
struct ConfigType {
    int points = 0, point_degree = 0, blocks = 0, block_size = 0;

    friend bool operator==(const ConfigType&, const ConfigType&) = default;
    std::string str() const
    {
        return "(" + std::to_string(points) + "_" + std::to_string(point_degree) + "," + std::to_string(blocks) + "_" +
               std::to_string(block_size) + ")";
    }
};

/// Finite incidence structure in which every point lies on the same number of blocks and
/// every block has the same number of points. Regularity is checked on construction.
class AbstractConfig {
public:
    static constexpr std::size_t max_points = 128;
    using PointSet = std::bitset<max_points>;

    AbstractConfig() = default;
    AbstractConfig(std::vector<std::string> point_labels, std::vector<std::string> block_labels,
                   std::vector<std::vector<int>> blocks)
        : point_labels_(std::move(point_labels)), block_labels_(std::move(block_labels)), blocks_(std::move(blocks))
    {
        const int np = static_cast<int>(point_labels_.size());
        if (point_labels_.size() > max_points) throw std::invalid_argument("AbstractConfig: too many points");
        if (block_labels_.size() != blocks_.size()) throw std::invalid_argument("AbstractConfig: block label count mismatch");
        through_.assign(np, {});
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            auto& pts = blocks_[b];
            std::sort(pts.begin(), pts.end());
            if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
                throw std::invalid_argument("AbstractConfig: repeated point in block " + block_labels_[b]);
            PointSet s;
            for (int p : pts) {
                if (p < 0 || p >= np) throw std::invalid_argument("AbstractConfig: point index out of range");
                s.set(p);
                through_[p].push_back(static_cast<int>(b));
            }
            sets_.push_back(s);
        }
        if (np == 0 || blocks_.empty()) throw std::invalid_argument("AbstractConfig: empty configuration");
        type_ = {np, static_cast<int>(through_[0].size()), static_cast<int>(blocks_.size()),
                 static_cast<int>(blocks_[0].size())};
        for (int p = 0; p < np; ++p)
            if (static_cast<int>(through_[p].size()) != type_.point_degree)
                throw std::invalid_argument("AbstractConfig: point " + point_labels_[p] + " has irregular degree");
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            if (static_cast<int>(blocks_[b].size()) != type_.block_size)
                throw std::invalid_argument("AbstractConfig: block " + block_labels_[b] + " has irregular size");
    }

    const ConfigType& type() const noexcept { return type_; }
    int num_points() const noexcept { return type_.points; }
    int num_blocks() const noexcept { return type_.blocks; }
    const std::vector<std::string>& point_labels() const noexcept { return point_labels_; }
    const std::vector<std::string>& block_labels() const noexcept { return block_labels_; }
    const std::vector<int>& points_of(int b) const { return blocks_.at(b); }
    const std::vector<int>& blocks_through(int p) const { return through_.at(p); }
    const PointSet& point_set(int b) const { return sets_.at(b); }
    bool incident(int p, int b) const { return sets_.at(b).test(p); }

    int point_index(const std::string& label) const
    {
        auto it = std::find(point_labels_.begin(), point_labels_.end(), label);
        if (it == point_labels_.end()) throw std::out_of_range("AbstractConfig: no point " + label);
        return static_cast<int>(it - point_labels_.begin());
    }
    int block_index(const std::string& label) const
    {
        auto it = std::find(block_labels_.begin(), block_labels_.end(), label);
        if (it == block_labels_.end()) throw std::out_of_range("AbstractConfig: no block " + label);
        return static_cast<int>(it - block_labels_.begin());
    }

    /// Number of blocks through both p and q.
    int common_blocks(int p, int q) const
    {
        int n = 0;
        for (int b : through_[p])
            if (sets_[b].test(q)) ++n;
        return n;
    }

    /// Swaps the roles of points and blocks.
    AbstractConfig dual() const
    {
        std::vector<std::vector<int>> bl(type_.points);
        for (int p = 0; p < type_.points; ++p) bl[p] = through_[p];
        return AbstractConfig(block_labels_, point_labels_, bl);
    }

private:
    std::vector<std::string> point_labels_, block_labels_;
    std::vector<std::vector<int>> blocks_, through_;
    std::vector<PointSet> sets_;
    ConfigType type_;
};

struct ConfigIsomorphism {
    std::vector<int> point_map, block_map;
};

/// Checks a claimed isomorphism against both incidence relations.
inline bool is_isomorphism(const AbstractConfig& a, const AbstractConfig& b, const ConfigIsomorphism& iso)
{
    if (!(a.type() == b.type())) return false;
    if (static_cast<int>(iso.point_map.size()) != a.num_points() || static_cast<int>(iso.block_map.size()) != a.num_blocks())
        return false;
    std::vector<int> pm = iso.point_map, bm = iso.block_map;
    std::sort(pm.begin(), pm.end());
    std::sort(bm.begin(), bm.end());
    for (int i = 0; i < a.num_points(); ++i)
        if (pm[i] != i) return false;
    for (int i = 0; i < a.num_blocks(); ++i)
        if (bm[i] != i) return false;
    for (int p = 0; p < a.num_points(); ++p)
        for (int k = 0; k < a.num_blocks(); ++k)
            if (a.incident(p, k) != b.incident(iso.point_map[p], iso.block_map[k])) return false;
    return true;
}

namespace detail {

// Sorted multiset of common-block counts with all other points.
inline std::vector<int> point_invariant(const AbstractConfig& c, int p)
{
    std::vector<int> v;
    for (int q = 0; q < c.num_points(); ++q)
        if (q != p) v.push_back(c.common_blocks(p, q));
    std::sort(v.begin(), v.end());
    return v;
}

class IsoSearch {
public:
    IsoSearch(const AbstractConfig& a, const AbstractConfig& b) : a_(a), b_(b)
    {
        const int n = a.num_points();
        lam_a_.assign(n, std::vector<int>(n));
        lam_b_.assign(n, std::vector<int>(n));
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                lam_a_[p][q] = a.common_blocks(p, q);
                lam_b_[p][q] = b.common_blocks(p, q);
            }
        for (int p = 0; p < n; ++p) {
            inv_a_.push_back(point_invariant(a, p));
            inv_b_.push_back(point_invariant(b, p));
        }
        // Breadth-first order over the collinearity graph keeps later choices constrained.
        std::vector<bool> seen(n, false);
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            seen[s] = true;
            std::size_t head = order_.size();
            order_.push_back(s);
            while (head < order_.size()) {
                int p = order_[head++];
                for (int q = 0; q < n; ++q)
                    if (!seen[q] && lam_a_[p][q] > 0) {
                        seen[q] = true;
                        order_.push_back(q);
                    }
            }
        }
    }

    std::optional<ConfigIsomorphism> run(std::optional<std::pair<int, int>> forced)
    {
        const int n = a_.num_points();
        map_.assign(n, -1);
        used_.assign(n, false);
        if (forced) {
            auto it = std::find(order_.begin(), order_.end(), forced->first);
            std::rotate(order_.begin(), it, it + 1);
            forced_ = forced->second;
        }
        if (!extend(0)) return std::nullopt;
        return result_;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    bool compatible(int p, int img) const
    {
        if (inv_a_[p] != inv_b_[img]) return false;
        for (int q = 0; q < a_.num_points(); ++q)
            if (map_[q] >= 0 && lam_a_[p][q] != lam_b_[img][map_[q]]) return false;
        // every block through p must still fit inside some block of b
        for (int blk : a_.blocks_through(p)) {
            AbstractConfig::PointSet s;
            s.set(img);
            for (int q : a_.points_of(blk))
                if (map_[q] >= 0) s.set(map_[q]);
            bool fits = false;
            for (int k : b_.blocks_through(img))
                if ((s & ~b_.point_set(k)).none()) {
                    fits = true;
                    break;
                }
            if (!fits) return false;
        }
        return true;
    }

    bool finish()
    {
        std::map<std::vector<int>, std::vector<int>> by_set;
        for (int k = 0; k < b_.num_blocks(); ++k) by_set[b_.points_of(k)].push_back(k);
        ConfigIsomorphism iso{map_, std::vector<int>(a_.num_blocks(), -1)};
        for (int k = 0; k < a_.num_blocks(); ++k) {
            std::vector<int> img;
            for (int p : a_.points_of(k)) img.push_back(map_[p]);
            std::sort(img.begin(), img.end());
            auto it = by_set.find(img);
            if (it == by_set.end() || it->second.empty()) return false;
            iso.block_map[k] = it->second.back();
            it->second.pop_back();
        }
        if (!is_isomorphism(a_, b_, iso)) return false;
        result_ = iso;
        return true;
    }

    bool extend(std::size_t depth)
    {
        ++nodes_;
        if (depth == order_.size()) return finish();
        int p = order_[depth];
        for (int img = 0; img < b_.num_points(); ++img) {
            if (depth == 0 && forced_ >= 0 && img != forced_) continue;
            if (used_[img] || !compatible(p, img)) continue;
            map_[p] = img;
            used_[img] = true;
            if (extend(depth + 1)) return true;
            map_[p] = -1;
            used_[img] = false;
        }
        return false;
    }

    const AbstractConfig& a_;
    const AbstractConfig& b_;
    std::vector<std::vector<int>> lam_a_, lam_b_, inv_a_, inv_b_;
    std::vector<int> order_, map_;
    std::vector<bool> used_;
    int forced_ = -1;
    std::uint64_t nodes_ = 0;
    ConfigIsomorphism result_;
};

}  // namespace detail

/// Isomorphism search: point invariants prune, backtracking over points, blocks follow.
/// Returns a witness that has been re-checked, or nullopt when none exists.
inline std::optional<ConfigIsomorphism> config_isomorphic(const AbstractConfig& a, const AbstractConfig& b,
                                                          std::optional<std::pair<int, int>> forced = std::nullopt)
{
    if (!(a.type() == b.type()))
        throw std::invalid_argument("config_isomorphic: type mismatch " + a.type().str() + " vs " + b.type().str());
    detail::IsoSearch s(a, b);
    return s.run(forced);
}

/// Points reachable from p under automorphisms.
inline std::vector<int> automorphism_orbit(const AbstractConfig& c, int p)
{
    std::vector<int> orbit;
    for (int q = 0; q < c.num_points(); ++q)
        if (config_isomorphic(c, c, std::pair{p, q})) orbit.push_back(q);
    return orbit;
}

inline bool automorphisms_transitive_on_points(const AbstractConfig& c)
{
    return static_cast<int>(automorphism_orbit(c, 0).size()) == c.num_points();
}

/// Isomorphism with a prescribed block bijection; the point bijection is then forced.
inline std::optional<ConfigIsomorphism> isomorphism_with_block_map(const AbstractConfig& a, const AbstractConfig& b,
                                                                   const std::vector<int>& block_map)
{
    if (!(a.type() == b.type())) return std::nullopt;
    std::map<std::vector<int>, int> by_blocks;
    for (int q = 0; q < b.num_points(); ++q) by_blocks[b.blocks_through(q)] = q;
    ConfigIsomorphism iso{std::vector<int>(a.num_points(), -1), block_map};
    for (int p = 0; p < a.num_points(); ++p) {
        std::vector<int> img;
        for (int k : a.blocks_through(p)) img.push_back(block_map.at(k));
        std::sort(img.begin(), img.end());
        auto it = by_blocks.find(img);
        if (it == by_blocks.end()) return std::nullopt;
        iso.point_map[p] = it->second;
    }
    if (!is_isomorphism(a, b, iso)) return std::nullopt;
    return iso;
}

/// Random configuration of type (a_c, b_d) from a shuffled slot list; retries until no block repeats a point.
inline AbstractConfig random_config(int a, int c, int b, int d, std::uint32_t seed)
{
    if (a * c != b * d) throw std::invalid_argument("random_config: a*c != b*d");
    std::mt19937 rng(seed);
    std::vector<int> slots;
    for (int p = 0; p < a; ++p)
        for (int k = 0; k < c; ++k) slots.push_back(p);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::shuffle(slots.begin(), slots.end(), rng);
        std::vector<std::vector<int>> blocks(b);
        bool ok = true;
        for (int k = 0; k < b && ok; ++k) {
            blocks[k].assign(slots.begin() + k * d, slots.begin() + (k + 1) * d);
            std::sort(blocks[k].begin(), blocks[k].end());
            ok = std::adjacent_find(blocks[k].begin(), blocks[k].end()) == blocks[k].end();
        }
        if (!ok) continue;
        std::vector<std::string> pl, bl;
        for (int p = 0; p < a; ++p) pl.push_back("p" + std::to_string(p));
        for (int k = 0; k < b; ++k) bl.push_back("b" + std::to_string(k));
        return AbstractConfig(pl, bl, blocks);
    }
    throw std::runtime_error("random_config: no simple configuration found");
}

}  // namespace desmic

#endif
