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

#ifndef DESMIC_ARITH_PRIME_FIELD_HPP
#define DESMIC_ARITH_PRIME_FIELD_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace desmic {

namespace detail {
constexpr bool is_prime(std::uint32_t n)
{
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}
}  // namespace detail

/// Element of the prime field F_P. The modulus is part of the type.
template <std::uint32_t P>
class Fp {
    static_assert(detail::is_prime(P), "Fp modulus must be prime");
    static_assert(P < (1u << 31), "Fp modulus too large");

public:
    static constexpr unsigned characteristic = P;

    Fp() = default;
    Fp(long long n)  // NOLINT(google-explicit-constructor)
        : v_(static_cast<std::uint32_t>(((n % static_cast<long long>(P)) + P) % P))
    {
    }

    std::uint32_t value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }

    Fp& operator+=(Fp o) { v_ = (v_ + o.v_) % P; return *this; }
    Fp& operator-=(Fp o) { v_ = (v_ + P - o.v_) % P; return *this; }
    Fp& operator*=(Fp o)
    {
        v_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) * o.v_) % P);
        return *this;
    }
    Fp& operator/=(Fp o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, Fp b) { return a += b; }
    friend Fp operator-(Fp a, Fp b) { return a -= b; }
    friend Fp operator*(Fp a, Fp b) { return a *= b; }
    friend Fp operator/(Fp a, Fp b) { return a /= b; }
    friend Fp operator-(Fp a) { return Fp(0) - a; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

    Fp pow(std::uint64_t e) const
    {
        Fp r(1), b = *this;
        for (; e; e >>= 1, b *= b)
            if (e & 1) r *= b;
        return r;
    }

    Fp inverse() const
    {
        if (is_zero()) throw std::domain_error("Fp: division by zero");
        return pow(P - 2);
    }

    /// Smallest square root in [0, P), if any.
    std::optional<Fp> sqrt() const
    {
        for (std::uint32_t r = 0; r < P; ++r)
            if (Fp(r) * Fp(r) == *this) return Fp(r);
        return std::nullopt;
    }

    std::string str() const { return std::to_string(v_); }
    friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

private:
    std::uint32_t v_ = 0;
};

using F2 = Fp<2>;

}  // namespace desmic

#endif
