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

#ifndef ATINF_ALGEBRA_UNIPOLY_HPP
#define ATINF_ALGEBRA_UNIPOLY_HPP

#include <algorithm>
#include <initializer_list>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace atinf {

namespace detail {

// Unqualified calls so that argument-dependent lookup picks the overload of
// the coefficient type at instantiation.
template <class T>
bool coeff_is_zero(const T& x) {
    return is_zero(x);
}
template <class T>
std::string coeff_text(const T& x) {
    return to_string(x);
}

}  // namespace detail

/// Dense univariate polynomial over a field K. Coefficient i multiplies X^i;
/// the vector never ends in a zero coefficient, so the zero polynomial is the
/// empty vector and has degree -1.
template <class K>
class UniPoly {
   public:
    static constexpr int zero_degree = -1;

    UniPoly() = default;
    explicit UniPoly(K c) {
        if (!detail::coeff_is_zero(c)) c_.push_back(std::move(c));
    }
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static UniPoly monomial(K c, int n) {
        if (detail::coeff_is_zero(c)) return {};
        std::vector<K> v(static_cast<std::size_t>(n) + 1, K(0));
        v.back() = std::move(c);
        return UniPoly(std::move(v));
    }
    static UniPoly variable() { return monomial(K(1), 1); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    const std::vector<K>& coefficients() const noexcept { return c_; }

    const K& operator[](int i) const {
        static const K zero{};
        return (i < 0 || i > degree()) ? zero : c_[static_cast<std::size_t>(i)];
    }
    const K& lc() const {
        if (c_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
        return c_.back();
    }
    /// Lowest index with a nonzero coefficient; -1 for the zero polynomial.
    int order() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!detail::coeff_is_zero(c_[i])) return static_cast<int>(i);
        return -1;
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    friend UniPoly operator*(const K& s, UniPoly p) {
        if (detail::coeff_is_zero(s)) return {};
        for (auto& c : p.c_) c = s * c;
        p.trim();
        return p;
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<K> v(static_cast<std::size_t>(k), K(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return UniPoly(std::move(v));
    }

    K operator()(const K& x) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    /// p(q(X)).
    UniPoly compose(const UniPoly& q) const {
        UniPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + UniPoly(*it);
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<K> v;
        v.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(K(static_cast<long>(i)) * c_[i]);
        return UniPoly(std::move(v));
    }

    UniPoly monic() const {
        if (is_zero()) return {};
        K inv = K(1) / lc();
        return inv * *this;
    }

    UniPoly pow(int e) const {
        UniPoly r(K(1)), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    template <class Fn>
    auto map(Fn&& fn) const {
        using L = decltype(fn(std::declval<const K&>()));
        std::vector<L> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(fn(c));
        return UniPoly<L>(std::move(v));
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const K& c = c_[static_cast<std::size_t>(i)];
            if (detail::coeff_is_zero(c)) continue;
            std::string cs = detail::coeff_text(c);
            bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
            if (neg) cs = cs.substr(1);
            bool compound = cs.find_first_of("+-", 0) != std::string::npos;
            if (compound) cs = "(" + cs + ")";
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
            if (mono.empty())
                out += cs;
            else if (cs == "1")
                out += mono;
            else
                out += cs + "*" + mono;
        }
        return out;
    }

   private:
    std::vector<K> c_;

    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }
};

template <class K>
bool is_zero(const UniPoly<K>& p) {
    return p.is_zero();
}

/// Euclidean division A = Q*B + R with deg R < deg B.
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divmod(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly<K>(), a};
    std::vector<K> r = a.coefficients();
    std::vector<K> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), K(0));
    K inv = K(1) / b.lc();
    const auto& bc = b.coefficients();
    int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        K c = r[static_cast<std::size_t>(i)] * inv;
        if (is_zero(c)) continue;
        q[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * bc[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {UniPoly<K>(std::move(q)), UniPoly<K>(std::move(r))};
}

template <class K>
UniPoly<K> operator/(const UniPoly<K>& a, const UniPoly<K>& b) {
    return divmod(a, b).first;
}
template <class K>
UniPoly<K> operator%(const UniPoly<K>& a, const UniPoly<K>& b) {
    return divmod(a, b).second;
}

/// Quotient of an exact division; throws InexactDivision when b does not divide a.
template <class K>
UniPoly<K> divide_exact(const UniPoly<K>& a, const UniPoly<K>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InexactDivision("polynomial division leaves a remainder");
    return q;
}

/// Monic gcd; gcd(A, 0) = monic(A), gcd(0, 0) = 0.
template <class K>
UniPoly<K> gcd(UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero()) {
        UniPoly<K> r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// Returns (g, s, t) with s*A + t*B = g, g monic.
template <class K>
std::tuple<UniPoly<K>, UniPoly<K>, UniPoly<K>> ext_gcd(const UniPoly<K>& a, const UniPoly<K>& b) {
    UniPoly<K> r0 = a, r1 = b, s0(K(1)), s1, t0, t1(K(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    K inv = K(1) / r0.lc();
    return {inv * r0, inv * s0, inv * t0};
}

/// Resultant over a field by the Euclidean remainder sequence.
template <class K>
K resultant(UniPoly<K> a, UniPoly<K> b) {
    if (a.is_zero() || b.is_zero()) return K(0);
    K res(1);
    while (true) {
        int da = a.degree(), db = b.degree();
        if (db == 0) {
            K p(1);
            for (int i = 0; i < da; ++i) p *= b.lc();
            return res * p;
        }
        if (da < db) {
            if ((da % 2) && (db % 2)) res = -res;
            std::swap(a, b);
            continue;
        }
        UniPoly<K> r = a % b;
        if (r.is_zero()) return K(0);
        // res(a, b) = (-1)^(da db) lc(b)^(da - dr) res(b, r)
        int dr = r.degree();
        K p(1);
        for (int i = 0; i < da - dr; ++i) p *= b.lc();
        if ((da % 2) && (db % 2)) res = -res;
        res *= p;
        a = std::move(b);
        b = std::move(r);
    }
}

/// Yun's squarefree decomposition: returns monic A_1, A_2, ... with
/// monic(A) = prod A_i^i, each A_i squarefree and pairwise coprime.
template <class K>
std::vector<UniPoly<K>> squarefree_decomposition(const UniPoly<K>& a) {
    std::vector<UniPoly<K>> out;
    if (a.degree() <= 0) return out;
    UniPoly<K> f = a.monic();
    UniPoly<K> df = f.derivative();
    UniPoly<K> g = gcd(f, df);
    UniPoly<K> b = divide_exact(f, g);
    UniPoly<K> c = divide_exact(df, g);
    UniPoly<K> d = c - b.derivative();
    while (b.degree() > 0) {
        UniPoly<K> ai = gcd(b, d);
        out.push_back(ai);
        b = divide_exact(b, ai);
        c = divide_exact(d, ai);
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& a) {
    if (a.degree() <= 0) return a.is_zero() ? a : UniPoly<K>(K(1));
    return divide_exact(a.monic(), gcd(a, a.derivative()));
}

}  // namespace atinf

#endif
