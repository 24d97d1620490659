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

#ifndef DESMIC_ARITH_F4_HPP
#define DESMIC_ARITH_F4_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace desmic {

/// Element a + b*w of F_4 = F_2[w]/(w^2 + w + 1).
class F4 {
public:
    static constexpr unsigned characteristic = 2;

    F4() = default;
    F4(long long n) : a_(static_cast<std::uint8_t>(n & 1)) {}  // NOLINT(google-explicit-constructor)
    F4(int a, int b) : a_(static_cast<std::uint8_t>(a & 1)), b_(static_cast<std::uint8_t>(b & 1)) {}

    static F4 omega() { return F4(0, 1); }
    /// The four elements 0, 1, w, w^2 in that order.
    static F4 element(int k)
    {
        static const F4 all[4] = {F4(0, 0), F4(1, 0), F4(0, 1), F4(1, 1)};
        return all[k & 3];
    }

    int a() const noexcept { return a_; }
    int b() const noexcept { return b_; }
    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }

    F4& operator+=(F4 o) { a_ ^= o.a_; b_ ^= o.b_; return *this; }
    F4& operator-=(F4 o) { return *this += o; }
    F4& operator*=(F4 o)
    {
        // w^2 = w + 1
        std::uint8_t bd = b_ & o.b_;
        std::uint8_t na = (a_ & o.a_) ^ bd;
        std::uint8_t nb = (a_ & o.b_) ^ (b_ & o.a_) ^ bd;
        a_ = na;
        b_ = nb;
        return *this;
    }
    F4& operator/=(F4 o) { return *this *= o.inverse(); }

    friend F4 operator+(F4 x, F4 y) { return x += y; }
    friend F4 operator-(F4 x, F4 y) { return x -= y; }
    friend F4 operator*(F4 x, F4 y) { return x *= y; }
    friend F4 operator/(F4 x, F4 y) { return x /= y; }
    friend F4 operator-(F4 x) { return x; }
    friend bool operator==(F4 x, F4 y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    F4 inverse() const
    {
        if (is_zero()) throw std::domain_error("F4: division by zero");
        for (int k = 1; k < 4; ++k)
            if (element(k) * *this == F4(1)) return element(k);
        return F4();
    }

    std::optional<F4> sqrt() const
    {
        // Frobenius is bijective: sqrt(x) = x^2.
        return *this * *this;
    }

    std::string str() const
    {
        if (b_ == 0) return a_ ? "1" : "0";
        return a_ ? "w^2" : "w";
    }
    friend std::ostream& operator<<(std::ostream& os, F4 x) { return os << x.str(); }

private:
    std::uint8_t a_ = 0, b_ = 0;
};

}  // namespace desmic

#endif
