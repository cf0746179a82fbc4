/*
   Copyright 2026 The atinf Authors

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

#ifndef ATINF_ALGEBRA_RATFUNC_HPP
#define ATINF_ALGEBRA_RATFUNC_HPP

#include <ostream>
#include <string>

#include "rational.hpp"
#include "unipoly.hpp"

namespace atinf {

/// Element of the rational function field Q(t), kept as num/den with den
/// monic and gcd(num, den) = 1. Zero is 0/1.
class RatFunc {
   public:
    using Poly = UniPoly<Rational>;

    RatFunc() : den_(Rational(1)) {}
    RatFunc(int v) : num_(Rational(v)), den_(Rational(1)) {}
    RatFunc(long v) : num_(Rational(v)), den_(Rational(1)) {}
    RatFunc(const Rational& v) : num_(v), den_(Rational(1)) {}
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Rational(1)) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        normalize();
    }

    /// The parameter t itself.
    static RatFunc t() { return RatFunc(Poly::variable()); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }

    /// Value at t = c; throws DivisionByZero when c is a pole.
    Rational eval(const Rational& c) const {
        Rational d = den_(c);
        if (d.is_zero()) throw DivisionByZero("evaluation at a pole");
        return num_(c) / d;
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        Poly g = gcd(a.den_, b.den_);
        Poly ad = divide_exact(a.den_, g), bd = divide_exact(b.den_, g);
        return RatFunc(a.num_ * bd + b.num_ * ad, a.den_ * bd);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_polynomial() && b.is_polynomial()) {
            RatFunc r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        RatFunc r;
        r.num_ = divide_exact(a.num_, g1) * divide_exact(b.num_, g2);
        r.den_ = divide_exact(a.den_, g2) * divide_exact(b.den_, g1);
        r.normalize_lc();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero()) throw DivisionByZero();
        RatFunc r;
        r.num_ = den_;
        r.den_ = num_;
        r.normalize_lc();
        return r;
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string to_string() const {
        if (den_.degree() == 0) return num_.to_string("t");
        std::string n = num_.to_string("t");
        if (num_.coefficients().size() > 1 || n.find_first_of("+-", 1) != std::string::npos) n = "(" + n + ")";
        return n + "/(" + den_.to_string("t") + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

   private:
    Poly num_, den_;

    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly(Rational(1));
            return;
        }
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
        normalize_lc();
    }
    void normalize_lc() {
        if (num_.is_zero()) {
            den_ = Poly(Rational(1));
            return;
        }
        Rational l = den_.lc();
        if (!l.is_one()) {
            Rational inv = l.inverse();
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }
inline bool decide_zero(const RatFunc& r) { return r.is_zero(); }
inline std::string to_string(const RatFunc& r) { return r.to_string(); }

}  // namespace atinf

#endif
