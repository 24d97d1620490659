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

#ifndef DESMIC_ARITH_FIELD_HPP
#define DESMIC_ARITH_FIELD_HPP

#include "desmic/arith/f4.hpp"
#include "desmic/arith/gaussian.hpp"
#include "desmic/arith/prime_field.hpp"
#include "desmic/arith/rational.hpp"

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace desmic {

template <class K>
concept Field = std::regular<K> && requires(K a, const K& b, long long n) {
    K(n);
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { b.is_zero() } -> std::convertible_to<bool>;
    { b.str() } -> std::convertible_to<std::string>;
    { K::characteristic } -> std::convertible_to<unsigned>;
};

template <class K>
inline constexpr bool is_finite_field_v = false;
template <std::uint32_t P>
inline constexpr bool is_finite_field_v<Fp<P>> = true;
template <>
inline constexpr bool is_finite_field_v<F4> = true;

/// All elements of a finite field, zero first.
template <class K>
std::vector<K> field_elements()
{
    static_assert(is_finite_field_v<K>, "field_elements needs a finite field");
    std::vector<K> out;
    if constexpr (std::is_same_v<K, F4>) {
        for (int k = 0; k < 4; ++k) out.push_back(F4::element(k));
    } else {
        for (long long r = 0; r < static_cast<long long>(K::characteristic); ++r) out.push_back(K(r));
    }
    return out;
}

/// Square root inside the field, if one exists.
template <class K>
std::optional<K> field_sqrt(const K& a)
{
    return a.sqrt();
}

/// The chosen square root of -1. Q(i) uses i; F_p with p = 1 mod 4 uses the smallest root.
template <class K>
K imag_unit()
{
    if constexpr (std::is_same_v<K, Gaussian>) {
        return Gaussian::i();
    } else if constexpr (is_finite_field_v<K> && !std::is_same_v<K, F4>) {
        if (K::characteristic % 4 != 1) throw std::domain_error("field lacks i: p is not 1 mod 4");
        return *K(-1).sqrt();
    } else {
        throw std::domain_error("field lacks i");
    }
}

template <class K>
bool has_imag_unit()
{
    if constexpr (std::is_same_v<K, Gaussian>) return true;
    else if constexpr (is_finite_field_v<K> && !std::is_same_v<K, F4>) return K::characteristic % 4 == 1;
    else return false;
}

template <class K>
K field_pow(K b, unsigned e)
{
    K r(1);
    for (; e; e >>= 1, b = b * b)
        if (e & 1) r = r * b;
    return r;
}

}  // namespace desmic

#endif
