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

#ifndef ATINF_ALGEBRA_ALGNUM_HPP
#define ATINF_ALGEBRA_ALGNUM_HPP

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "rational.hpp"
#include "unipoly.hpp"

namespace atinf {

struct NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Limits on extension towers.
struct ExtensionBudget {
    int max_depth = 2;
    int max_degree = 16;
};

/// Element of Q or of a tower of simple extensions base[z]/(m(z)).
///
/// Moduli are squarefree but not proven irreducible. An element whose
/// inversion reveals a nontrivial factor of a modulus raises
/// ZeroDivisorSplit; callers that create extensions catch it and retry
/// with the factors.
class AlgNum {
   public:
    AlgNum() = default;
    AlgNum(int v) : q_(v) {}
    AlgNum(long v) : q_(v) {}
    AlgNum(const Rational& v) : q_(v) {}

    /// The class of z in f = base[z]/(m).
    static AlgNum generator(const FieldPtr& f);
    /// sum c[i] z^i in f; each c[i] must live in an ancestor of f.
    static AlgNum from_coefficients(const FieldPtr& f, std::vector<AlgNum> c);

    const FieldPtr& field() const noexcept { return f_; }
    bool is_rational() const noexcept { return !f_; }
    /// Value in Q; valid only when is_rational().
    const Rational& rational() const noexcept { return q_; }
    const std::vector<AlgNum>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return f_ ? c_.empty() : q_.is_zero(); }

    /// Same element viewed in a descendant field of its own field.
    AlgNum promote(const FieldPtr& target) const;
    /// Writes the element in the smallest field of its tower it belongs to
    /// by representation.
    AlgNum demoted() const;

    AlgNum operator-() const;
    friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator-(const AlgNum& a, const AlgNum& b) { return a + (-b); }
    friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }
    AlgNum& operator+=(const AlgNum& o) { return *this = *this + o; }
    AlgNum& operator-=(const AlgNum& o) { return *this = *this - o; }
    AlgNum& operator*=(const AlgNum& o) { return *this = *this * o; }
    AlgNum& operator/=(const AlgNum& o) { return *this = *this / o; }
    AlgNum inverse() const;

    friend bool operator==(const AlgNum& a, const AlgNum& b);

    /// Coordinates over Q in the power basis of the whole tower.
    std::vector<Rational> flatten() const;
    static AlgNum unflatten(const FieldPtr& f, const std::vector<Rational>& v, std::size_t offset = 0);

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const AlgNum& a) { return os << a.to_string(); }

   private:
    FieldPtr f_;
    Rational q_;
    std::vector<AlgNum> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    static FieldPtr common(const AlgNum& a, const AlgNum& b);
};

struct NumberField {
    FieldPtr base;                 ///< null means Q
    std::vector<AlgNum> modulus;   ///< monic, coefficients in base, low to high
    std::string name;
    int depth = 1;
    int degree = 0;                ///< over base
    int absolute_degree = 0;       ///< over Q
};

inline bool is_ancestor(const FieldPtr& anc, const FieldPtr& f) {
    for (FieldPtr g = f; g; g = g->base)
        if (g == anc) return true;
    return !anc;
}

/// Raised when a modulus turned out to be reducible: `factor` is a monic
/// proper factor of field->modulus over field->base.
class ZeroDivisorSplit : public Error {
   public:
    ZeroDivisorSplit(FieldPtr f, UniPoly<AlgNum> factor)
        : Error("ZeroDivisorSplit", "modulus of " + f->name + " is reducible"),
          field_(std::move(f)), factor_(std::move(factor)) {}
    const FieldPtr& field() const noexcept { return field_; }
    const UniPoly<AlgNum>& factor() const noexcept { return factor_; }

   private:
    FieldPtr field_;
    UniPoly<AlgNum> factor_;
};

inline bool is_zero(const AlgNum& a) { return a.is_zero(); }
inline std::string to_string(const AlgNum& a) { return a.to_string(); }

/// Strict zero test: false only for units; throws ZeroDivisorSplit for a
/// nonzero zero divisor.
inline bool decide_zero(const AlgNum& a) {
    if (a.is_zero()) return true;
    (void)a.inverse();
    return false;
}

/// base[z]/(modulus). modulus must be monic of degree >= 2 and squarefree.
inline FieldPtr make_extension(const FieldPtr& base, const UniPoly<AlgNum>& modulus, std::string name,
                               const ExtensionBudget& budget = {}) {
    if (modulus.degree() < 2) throw std::invalid_argument("extension modulus must have degree >= 2");
    auto f = std::make_shared<NumberField>();
    f->base = base;
    f->name = std::move(name);
    f->depth = base ? base->depth + 1 : 1;
    f->degree = modulus.degree();
    f->absolute_degree = f->degree * (base ? base->absolute_degree : 1);
    if (f->depth > budget.max_depth || f->absolute_degree > budget.max_degree)
        throw NeedsExtension("extension of degree " + std::to_string(f->absolute_degree) + " and depth " +
                             std::to_string(f->depth) + " exceeds the budget");
    UniPoly<AlgNum> m = modulus.monic();
    for (const auto& c : m.coefficients()) f->modulus.push_back(base ? c.promote(base) : c);
    return f;
}

/// Convenience for extensions of Q.
inline FieldPtr make_extension(const UniPoly<Rational>& modulus, std::string name, const ExtensionBudget& budget = {}) {
    return make_extension(nullptr, modulus.map([](const Rational& r) { return AlgNum(r); }), std::move(name), budget);
}

inline UniPoly<AlgNum> modulus_poly(const FieldPtr& f) { return UniPoly<AlgNum>(f->modulus); }

inline AlgNum AlgNum::generator(const FieldPtr& f) {
    AlgNum a;
    a.f_ = f;
    a.c_ = {f->base ? AlgNum().promote(f->base) : AlgNum(), f->base ? AlgNum(1).promote(f->base) : AlgNum(1)};
    return a;
}

inline AlgNum AlgNum::from_coefficients(const FieldPtr& f, std::vector<AlgNum> c) {
    if (!f) {
        if (c.size() > 1) throw FieldMismatch("polynomial coefficients given for Q");
        return c.empty() ? AlgNum() : c[0];
    }
    for (auto& x : c) x = x.promote(f->base);
    // reduce modulo the modulus
    const auto& m = f->modulus;
    int n = f->degree;
    for (int i = static_cast<int>(c.size()) - 1; i >= n; --i) {
        AlgNum lead = c[static_cast<std::size_t>(i)];
        if (lead.is_zero()) continue;
        for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i - n + j)] -= lead * m[static_cast<std::size_t>(j)];
        c[static_cast<std::size_t>(i)] = AlgNum().promote(f->base);
    }
    if (c.size() > static_cast<std::size_t>(n)) c.resize(static_cast<std::size_t>(n));
    AlgNum a;
    a.f_ = f;
    a.c_ = std::move(c);
    a.trim();
    return a;
}

inline AlgNum AlgNum::promote(const FieldPtr& target) const {
    if (f_ == target) return *this;
    if (!is_ancestor(f_, target)) throw FieldMismatch("cannot move an element between unrelated fields");
    // target's base chain contains f_: embed as a constant of target over its base
    AlgNum inner = promote(target->base);
    AlgNum a;
    a.f_ = target;
    if (!inner.is_zero()) a.c_.push_back(std::move(inner));
    return a;
}

inline AlgNum AlgNum::demoted() const {
    if (!f_) return *this;
    if (c_.empty()) return AlgNum();
    if (c_.size() == 1) return c_[0].demoted();
    return *this;
}

inline FieldPtr AlgNum::common(const AlgNum& a, const AlgNum& b) {
    if (a.f_ == b.f_) return a.f_;
    if (is_ancestor(a.f_, b.f_)) return b.f_;
    if (is_ancestor(b.f_, a.f_)) return a.f_;
    throw FieldMismatch("operands live in unrelated fields");
}

inline AlgNum AlgNum::operator-() const {
    AlgNum r = *this;
    if (!f_) {
        r.q_ = -q_;
        return r;
    }
    for (auto& c : r.c_) c = -c;
    return r;
}

inline AlgNum operator+(const AlgNum& a, const AlgNum& b) {
    FieldPtr f = AlgNum::common(a, b);
    if (!f) return AlgNum(a.q_ + b.q_);
    AlgNum x = a.promote(f), y = b.promote(f);
    if (x.c_.size() < y.c_.size()) std::swap(x, y);
    for (std::size_t i = 0; i < y.c_.size(); ++i) x.c_[i] += y.c_[i];
    x.trim();
    return x;
}

inline AlgNum operator*(const AlgNum& a, const AlgNum& b) {
    FieldPtr f = AlgNum::common(a, b);
    if (!f) return AlgNum(a.q_ * b.q_);
    AlgNum x = a.promote(f), y = b.promote(f);
    if (x.c_.empty() || y.c_.empty()) return AlgNum().promote(f);
    std::vector<AlgNum> r(x.c_.size() + y.c_.size() - 1, AlgNum().promote(f->base));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
    }
    return AlgNum::from_coefficients(f, std::move(r));
}

inline AlgNum AlgNum::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (!f_) return AlgNum(q_.inverse());
    UniPoly<AlgNum> p(c_), m = modulus_poly(f_);
    auto [g, s, t] = ext_gcd(p, m);
    if (g.degree() > 0) throw ZeroDivisorSplit(f_, g);
    return from_coefficients(f_, s.coefficients());
}

inline bool operator==(const AlgNum& a, const AlgNum& b) {
    if (a.f_ == b.f_) return a.f_ ? a.c_ == b.c_ : a.q_ == b.q_;
    FieldPtr f;
    try {
        f = AlgNum::common(a, b);
    } catch (const FieldMismatch&) {
        return false;
    }
    AlgNum x = a.promote(f), y = b.promote(f);
    return x.c_ == y.c_;
}

inline std::vector<Rational> AlgNum::flatten() const {
    if (!f_) return {q_};
    std::size_t bd = f_->base ? static_cast<std::size_t>(f_->base->absolute_degree) : 1;
    std::vector<Rational> v(static_cast<std::size_t>(f_->absolute_degree), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        auto sub = c_[i].flatten();
        for (std::size_t j = 0; j < sub.size(); ++j) v[i * bd + j] = sub[j];
    }
    return v;
}

inline AlgNum AlgNum::unflatten(const FieldPtr& f, const std::vector<Rational>& v, std::size_t offset) {
    if (!f) return AlgNum(v[offset]);
    std::size_t bd = f->base ? static_cast<std::size_t>(f->base->absolute_degree) : 1;
    std::vector<AlgNum> c;
    for (int i = 0; i < f->degree; ++i) c.push_back(unflatten(f->base, v, offset + static_cast<std::size_t>(i) * bd));
    return from_coefficients(f, std::move(c));
}

inline std::string AlgNum::to_string() const {
    if (!f_) return q_.to_string();
    return UniPoly<AlgNum>(c_).to_string(f_->name);
}

/// Characteristic polynomial over Q of multiplication by a on the whole
/// tower, by the Faddeev-LeVerrier recurrence.
inline UniPoly<Rational> charpoly(const AlgNum& a) {
    if (!a.field()) return UniPoly<Rational>{-a.rational(), Rational(1)};
    const FieldPtr& f = a.field();
    std::size_t n = static_cast<std::size_t>(f->absolute_degree);
    using Mat = std::vector<std::vector<Rational>>;
    Mat A(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> e(n, Rational(0));
        e[k] = 1;
        auto col = (a * AlgNum::unflatten(f, e)).flatten();
        for (std::size_t i = 0; i < n; ++i) A[i][k] = col[i];
    }
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    Mat M(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t k = 1; k <= n; ++k) {
        Mat AM(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational s = i == j ? c[n - k + 1] : Rational(0);
                M[i][j] = M[i][j] + s;
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (A[i][l].is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) AM[i][j] += A[i][l] * M[l][j];
            }
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += AM[i][i];
        c[n - k] = -tr / Rational(static_cast<long>(k));
        M = std::move(AM);
    }
    return UniPoly<Rational>(std::move(c));
}

/// Squarefree part of the characteristic polynomial: the minimal polynomial
/// over Q when the tower is a field.
inline UniPoly<Rational> rational_minpoly(const AlgNum& a) { return squarefree_part(charpoly(a)); }

}  // namespace atinf

#endif
