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

#ifndef DESMIC_CONFIG_S4_HPP
#define DESMIC_CONFIG_S4_HPP

#include <array>
#include <vector>

#include "desmic/config/perm.hpp"

namespace desmic {

/// The three Klein-type subgroups H_1, H_2, H_3 of S_4 whose cosets label the line-nodes.
inline std::array<std::vector<Perm>, 3> coset_subgroups()
{
    std::array<std::vector<Perm>, 3> h;
    const std::array<std::array<const char*, 4>, 3> gens = {{{"1", "(12)", "(34)", "(12)(34)"},
                                                            {"1", "(13)", "(24)", "(13)(24)"},
                                                            {"1", "(14)", "(23)", "(14)(23)"}}};
    for (int i = 0; i < 3; ++i)
        for (const char* g : gens[i]) h[i].push_back(Perm::parse(g, 4));
    return h;
}

}  // namespace desmic

#endif
