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

#ifndef DESMIC_ARITH_GAUSSIAN_HPP
#define DESMIC_ARITH_GAUSSIAN_HPP

#include "desmic/arith/rational.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace desmic {

/// Element a + b*i of Q(i).
class Gaussian {
public:
    static constexpr unsigned characteristic = 0;

    Gaussian() = default;
    Gaussian(long long n) : re_(n) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }
    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    Gaussian conj() const { return Gaussian(re_, -im_); }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Gaussian& operator+=(const Gaussian& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Gaussian& operator*=(const Gaussian& o)
    {
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o)
    {
        Rational n = o.norm();
        if (n.is_zero()) throw std::domain_error("Gaussian: division by zero");
        *this *= o.conj();
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re_, -a.im_); }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    /// Exact square root when one exists in Q(i).
    std::optional<Gaussian> sqrt() const
    {
        if (im_.is_zero()) {
            if (auto r = re_.sqrt()) return Gaussian(*r);
            if (auto r = (-re_).sqrt()) return Gaussian(Rational(0), *r);
            return std::nullopt;
        }
        // (x + iy)^2 = re + i im  =>  x^2 = (re + |z|)/2, y = im/(2x)
        auto m = norm().sqrt();
        if (!m) return std::nullopt;
        auto x = ((re_ + *m) / Rational(2)).sqrt();
        if (!x || x->is_zero()) return std::nullopt;
        return Gaussian(*x, im_ / (Rational(2) * *x));
    }

    std::string str() const
    {
        if (im_.is_zero()) return re_.str();
        std::string im = im_ == Rational(1) ? "i" : (im_ == Rational(-1) ? "-i" : im_.str() + "*i");
        if (re_.is_zero()) return im;
        return re_.str() + (im_.sign() > 0 ? "+" : "") + im;
    }
    friend std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.str(); }

private:
    Rational re_, im_;
};

}  // namespace desmic

#endif
