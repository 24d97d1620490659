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

#ifndef DESMIC_CONFIG_PERM_HPP
#define DESMIC_CONFIG_PERM_HPP

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace desmic {

/// Permutation of {0,...,n-1}; p[i] is the image of i. Printed 1-based in cycle notation.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }
    explicit Perm(std::vector<int> images) : img_(std::move(images))
    {
        std::vector<int> s = img_;
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] != static_cast<int>(i)) throw std::invalid_argument("Perm: not a permutation");
    }

    /// Parses cycle notation such as "(143)", "(12)(34)" or "1" for the identity.
    static Perm parse(const std::string& s, std::size_t n)
    {
        Perm p(n);
        std::size_t k = 0;
        while (k < s.size()) {
            if (std::isspace(static_cast<unsigned char>(s[k])) || (s[k] == '1' && s.size() == 1)) {
                ++k;
                continue;
            }
            if (s[k] != '(') throw std::invalid_argument("Perm::parse: bad cycle string '" + s + "'");
            std::size_t e = s.find(')', k);
            if (e == std::string::npos) throw std::invalid_argument("Perm::parse: unbalanced '" + s + "'");
            std::vector<int> cyc;
            for (std::size_t j = k + 1; j < e; ++j) {
                if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw std::invalid_argument("Perm::parse: bad digit in '" + s + "'");
                int v = s[j] - '1';
                if (v < 0 || v >= static_cast<int>(n)) throw std::invalid_argument("Perm::parse: point out of range in '" + s + "'");
                cyc.push_back(v);
            }
            // Cycles compose right to left, like the product they denote.
            Perm c(n);
            for (std::size_t j = 0; j < cyc.size(); ++j) c.img_[cyc[j]] = cyc[(j + 1) % cyc.size()];
            p = p * c;
            k = e + 1;
        }
        return p;
    }

    std::size_t size() const noexcept { return img_.size(); }
    int operator()(int i) const { return img_.at(i); }
    const std::vector<int>& images() const noexcept { return img_; }

    /// (a*b)(i) = a(b(i)).
    friend Perm operator*(const Perm& a, const Perm& b)
    {
        if (a.size() != b.size()) throw std::invalid_argument("Perm: size mismatch");
        Perm r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.img_[i] = a.img_[b.img_[i]];
        return r;
    }

    Perm inverse() const
    {
        Perm r(size());
        for (std::size_t i = 0; i < size(); ++i) r.img_[img_[i]] = static_cast<int>(i);
        return r;
    }

    bool is_identity() const
    {
        for (std::size_t i = 0; i < size(); ++i)
            if (img_[i] != static_cast<int>(i)) return false;
        return true;
    }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

    std::string str() const
    {
        std::string s;
        std::vector<bool> seen(size(), false);
        for (std::size_t i = 0; i < size(); ++i) {
            if (seen[i] || img_[i] == static_cast<int>(i)) continue;
            s += '(';
            for (int j = static_cast<int>(i); !seen[j]; j = img_[j]) {
                seen[j] = true;
                s += std::to_string(j + 1);
            }
            s += ')';
        }
        return s.empty() ? "1" : s;
    }

private:
    std::vector<int> img_;
};

/// All permutations of n points in lexicographic order of their image lists.
inline std::vector<Perm> all_perms(std::size_t n)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::vector<Perm> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace desmic

#endif
