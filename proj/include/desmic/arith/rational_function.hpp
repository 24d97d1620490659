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

#ifndef DESMIC_ARITH_RATIONAL_FUNCTION_HPP
#define DESMIC_ARITH_RATIONAL_FUNCTION_HPP

#include "desmic/arith/multipoly.hpp"

#include <stdexcept>
#include <string>

namespace desmic {

/// Fraction num/den of polynomials over K. No gcd cancellation is attempted;
/// equality is tested by cross-multiplication, which is exact in an integral domain.
template <Field K>
class RationalFunction {
public:
    static constexpr unsigned characteristic = K::characteristic;

    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(MultiPoly<K> n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(MultiPoly<K> n, MultiPoly<K> d) : num_(std::move(n)), den_(std::move(d))
    {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        normalize();
    }

    const MultiPoly<K>& num() const noexcept { return num_; }
    const MultiPoly<K>& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
    {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
    }

    std::string str() const
    {
        if (den_.is_constant() && den_.constant_term() == K(1)) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void normalize()
    {
        if (num_.is_zero()) {
            den_ = MultiPoly<K>(1);
            return;
        }
        if (auto q = num_.exact_div(den_)) {
            num_ = *q;
            den_ = MultiPoly<K>(1);
            return;
        }
        // make the denominator's leading coefficient 1
        K lc = den_.leading_term().second;
        if (!(lc == K(1))) {
            K inv = K(1) / lc;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    MultiPoly<K> num_, den_;
};

}  // namespace desmic

#endif
