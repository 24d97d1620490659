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

#ifndef DESMIC_LATTICE_DYNKIN_HPP
#define DESMIC_LATTICE_DYNKIN_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace desmic {

/// Type of a connected Dynkin diagram; affine types print as "D~4".
struct DynkinType {
    char family = 'A';
    int rank = 0;  // number of nodes minus one for affine types
    bool affine = false;

    std::string str() const { return std::string(1, family) + (affine ? "~" : "") + std::to_string(rank); }
    friend bool operator==(const DynkinType&, const DynkinType&) = default;
    friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
};

/// Classifies the dual graph of a connected set of (-2)-curves, given as the symmetric matrix
/// of mutual intersection numbers (diagonal ignored). Throws if no ADE or affine ADE template fits.
inline DynkinType classify_connected_dynkin(const std::vector<std::vector<long long>>& m)
{
    const int n = static_cast<int>(m.size());
    if (n == 0) throw std::invalid_argument("classify_dynkin: empty graph");
    if (n == 2 && m[0][1] == 2) return {'A', 1, true};
    std::vector<std::vector<int>> adj(n);
    int edges = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m[i][j] != 0 && m[i][j] != 1) throw std::invalid_argument("classify_dynkin: multiple edge");
            if (m[i][j] != m[j][i]) throw std::invalid_argument("classify_dynkin: asymmetric matrix");
            if (m[i][j] == 1) {
                adj[i].push_back(j);
                if (i < j) ++edges;
            }
        }
    // connectivity
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n) throw std::invalid_argument("classify_dynkin: graph is not connected");

    if (edges == n) {
        for (const auto& a : adj)
            if (a.size() != 2) throw std::invalid_argument("classify_dynkin: no template matches");
        return {'A', n - 1, true};
    }
    if (edges != n - 1) throw std::invalid_argument("classify_dynkin: no template matches");

    std::vector<int> branch;
    for (int v = 0; v < n; ++v) {
        if (adj[v].size() > 4) throw std::invalid_argument("classify_dynkin: no template matches");
        if (adj[v].size() >= 3) branch.push_back(v);
    }
    if (branch.empty()) return {'A', n, false};
    if (branch.size() == 1 && adj[branch[0]].size() == 4) {
        if (n == 5) return {'D', 4, true};
        throw std::invalid_argument("classify_dynkin: no template matches");
    }
    // length of the arm leaving v through w
    auto arm = [&](int v, int w) {
        int len = 1, prev = v;
        while (adj[w].size() == 2) {
            int nx = adj[w][0] == prev ? adj[w][1] : adj[w][0];
            prev = w;
            w = nx;
            ++len;
        }
        return std::pair{len, static_cast<int>(adj[w].size())};
    };
    if (branch.size() == 1) {
        std::vector<int> arms;
        for (int w : adj[branch[0]]) arms.push_back(arm(branch[0], w).first);
        std::sort(arms.begin(), arms.end());
        int p = arms[0], q = arms[1], r = arms[2];
        if (p == 1 && q == 1) return {'D', n, false};
        if (p == 1 && q == 2 && r >= 2 && r <= 4) return {'E', n, false};
        if (p == 2 && q == 2 && r == 2) return {'E', 6, true};
        if (p == 1 && q == 3 && r == 3) return {'E', 7, true};
        if (p == 1 && q == 2 && r == 5) return {'E', 8, true};
        throw std::invalid_argument("classify_dynkin: no template matches");
    }
    if (branch.size() == 2) {
        for (int b : branch) {
            if (adj[b].size() != 3) throw std::invalid_argument("classify_dynkin: no template matches");
            int leaves = 0;
            for (int w : adj[b])
                if (adj[w].size() == 1) ++leaves;
            if (leaves < 2) throw std::invalid_argument("classify_dynkin: no template matches");
        }
        if (n == 5) throw std::invalid_argument("classify_dynkin: no template matches");
        return {'D', n - 1, true};
    }
    throw std::invalid_argument("classify_dynkin: no template matches");
}

/// Classifies every connected component; the result is sorted.
inline std::vector<DynkinType> classify_dynkin(const std::vector<std::vector<long long>>& m)
{
    const int n = static_cast<int>(m.size());
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (w != v && m[v][w] != 0 && comp[w] < 0) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
        }
        ++nc;
    }
    std::vector<DynkinType> out;
    for (int c = 0; c < nc; ++c) {
        std::vector<int> idx;
        for (int v = 0; v < n; ++v)
            if (comp[v] == c) idx.push_back(v);
        std::vector<std::vector<long long>> sub(idx.size(), std::vector<long long>(idx.size()));
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = m[idx[i]][idx[j]];
        out.push_back(classify_connected_dynkin(sub));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// "A3+D4" style rendering.
inline std::string dynkin_str(const std::vector<DynkinType>& ts)
{
    std::string s;
    for (const auto& t : ts) s += (s.empty() ? "" : "+") + t.str();
    return s;
}

}  // namespace desmic

#endif
