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

#ifndef ATINF_ALGEBRA_BIPOLY_HPP
#define ATINF_ALGEBRA_BIPOLY_HPP

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "unipoly.hpp"

namespace atinf {

/// Exponent pair (e1, e2) of the first and second variable.
struct Monomial {
    int e1 = 0;
    int e2 = 0;
    int degree() const noexcept { return e1 + e2; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order, higher total degree first, ties broken by higher e1.
struct GradedDescending {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return a.e1 > b.e1;
    }
};

/// Sparse bivariate polynomial over a field K. Variable 0 is the first
/// variable (x or u), variable 1 the second (y or v).
template <class K>
class BiPoly {
   public:
    using Terms = std::map<Monomial, K, GradedDescending>;

    BiPoly() = default;
    explicit BiPoly(const K& c) {
        if (!detail::coeff_is_zero(c)) t_.emplace(Monomial{0, 0}, c);
    }
    static BiPoly term(const K& c, int e1, int e2) {
        BiPoly p;
        if (!detail::coeff_is_zero(c)) p.t_.emplace(Monomial{e1, e2}, c);
        return p;
    }
    static BiPoly var(int which) { return which == 0 ? term(K(1), 1, 0) : term(K(1), 0, 1); }
    /// sum_k c_k * var^k with c_k polynomials in the other variable.
    static BiPoly from_univariate(const std::vector<UniPoly<K>>& cs, int main) {
        BiPoly p;
        for (std::size_t k = 0; k < cs.size(); ++k) {
            const auto& c = cs[k].coefficients();
            for (std::size_t j = 0; j < c.size(); ++j) {
                if (detail::coeff_is_zero(c[j])) continue;
                int a = static_cast<int>(k), b = static_cast<int>(j);
                p.t_.emplace(main == 0 ? Monomial{a, b} : Monomial{b, a}, c[j]);
            }
        }
        return p;
    }
    /// Embeds a univariate polynomial in the given variable.
    static BiPoly from_poly(const UniPoly<K>& p, int which) {
        BiPoly r;
        const auto& c = p.coefficients();
        for (std::size_t k = 0; k < c.size(); ++k)
            if (!detail::coeff_is_zero(c[k])) r.t_.emplace(which == 0 ? Monomial{static_cast<int>(k), 0} : Monomial{0, static_cast<int>(k)}, c[k]);
        return r;
    }

    const Terms& terms() const noexcept { return t_; }
    bool is_zero() const noexcept { return t_.empty(); }
    bool is_constant() const noexcept { return t_.empty() || (t_.size() == 1 && t_.begin()->first.degree() == 0); }
    std::size_t size() const noexcept { return t_.size(); }

    const K& coeff(int e1, int e2) const {
        static const K zero{};
        auto it = t_.find(Monomial{e1, e2});
        return it == t_.end() ? zero : it->second;
    }
    K constant_term() const { return coeff(0, 0); }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const noexcept { return t_.empty() ? -1 : t_.begin()->first.degree(); }
    int degree_in(int which) const noexcept {
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, which == 0 ? m.e1 : m.e2);
        return d;
    }
    /// Smallest exponent of the variable; -1 for zero.
    int order_in(int which) const noexcept {
        if (t_.empty()) return -1;
        int d = 1 << 30;
        for (const auto& [m, c] : t_) d = std::min(d, which == 0 ? m.e1 : m.e2);
        return d;
    }
    /// Lowest total degree of a term: the multiplicity at the origin.
    int order() const noexcept { return t_.empty() ? -1 : t_.rbegin()->first.degree(); }

    BiPoly homogeneous_part(int k) const {
        BiPoly r;
        for (const auto& [m, c] : t_)
            if (m.degree() == k) r.t_.emplace(m, c);
        return r;
    }
    BiPoly partial(int which) const {
        BiPoly r;
        for (const auto& [m, c] : t_) {
            int e = which == 0 ? m.e1 : m.e2;
            if (e == 0) continue;
            K nc = K(static_cast<long>(e)) * c;
            Monomial nm = which == 0 ? Monomial{m.e1 - 1, m.e2} : Monomial{m.e1, m.e2 - 1};
            r.t_.emplace(nm, nc);
        }
        return r;
    }
    BiPoly swapped() const {
        BiPoly r;
        for (const auto& [m, c] : t_) r.t_.emplace(Monomial{m.e2, m.e1}, c);
        return r;
    }

    /// Multiplies by var1^a var2^b.
    BiPoly shifted(int a, int b) const {
        BiPoly r;
        for (const auto& [m, c] : t_) r.t_.emplace(Monomial{m.e1 + a, m.e2 + b}, c);
        return r;
    }
    /// Divides by var1^a var2^b; throws InexactDivision when some term lacks it.
    BiPoly unshifted(int a, int b) const {
        BiPoly r;
        for (const auto& [m, c] : t_) {
            if (m.e1 < a || m.e2 < b) throw InexactDivision("monomial does not divide polynomial");
            r.t_.emplace(Monomial{m.e1 - a, m.e2 - b}, c);
        }
        return r;
    }

    /// Coefficients with respect to the main variable, each a polynomial in
    /// the other variable.
    std::vector<UniPoly<K>> as_univariate(int main) const {
        int n = degree_in(main);
        std::vector<std::vector<K>> raw(static_cast<std::size_t>(n + 1));
        for (const auto& [m, c] : t_) {
            int a = main == 0 ? m.e1 : m.e2, b = main == 0 ? m.e2 : m.e1;
            auto& v = raw[static_cast<std::size_t>(a)];
            if (v.size() <= static_cast<std::size_t>(b)) v.resize(static_cast<std::size_t>(b) + 1, K(0));
            v[static_cast<std::size_t>(b)] = c;
        }
        std::vector<UniPoly<K>> out;
        out.reserve(raw.size());
        for (auto& v : raw) out.emplace_back(std::move(v));
        return out;
    }
    /// Univariate polynomial when the other variable does not occur.
    UniPoly<K> to_univariate(int which) const {
        std::vector<K> v;
        for (const auto& [m, c] : t_) {
            int a = which == 0 ? m.e1 : m.e2, b = which == 0 ? m.e2 : m.e1;
            if (b != 0) throw std::invalid_argument("polynomial depends on both variables");
            if (v.size() <= static_cast<std::size_t>(a)) v.resize(static_cast<std::size_t>(a) + 1, K(0));
            v[static_cast<std::size_t>(a)] = c;
        }
        return UniPoly<K>(std::move(v));
    }

    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r.add_term(Monomial{ma.e1 + mb.e1, ma.e2 + mb.e2}, ca * cb);
        return r;
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    friend BiPoly operator*(const K& s, const BiPoly& p) {
        BiPoly r;
        if (detail::coeff_is_zero(s)) return r;
        for (const auto& [m, c] : p.t_) {
            K v = s * c;
            if (!detail::coeff_is_zero(v)) r.t_.emplace(m, std::move(v));
        }
        return r;
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

    BiPoly pow(int e) const {
        BiPoly r(K(1)), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    K operator()(const K& a, const K& b) const {
        K acc(0);
        for (const auto& [m, c] : t_) {
            K v = c;
            for (int i = 0; i < m.e1; ++i) v *= a;
            for (int i = 0; i < m.e2; ++i) v *= b;
            acc += v;
        }
        return acc;
    }

    /// P(X, Y) for polynomials X, Y in some polynomial ring R over K.
    template <class R>
    R compose(const R& X, const R& Y) const {
        std::vector<R> xp{R(K(1))}, yp{R(K(1))};
        int dx = degree_in(0), dy = degree_in(1);
        for (int i = 1; i <= dx; ++i) xp.push_back(xp.back() * X);
        for (int i = 1; i <= dy; ++i) yp.push_back(yp.back() * Y);
        R acc{};
        for (const auto& [m, c] : t_) acc += c * (xp[static_cast<std::size_t>(m.e1)] * yp[static_cast<std::size_t>(m.e2)]);
        return acc;
    }
    BiPoly substitute(int which, const BiPoly& expr) const {
        return which == 0 ? compose(expr, var(1)) : compose(var(0), expr);
    }
    /// Restriction to a line var = value, as a polynomial in the other variable.
    UniPoly<K> restrict_to(int which, const K& value) const {
        std::vector<K> v;
        for (const auto& [m, c] : t_) {
            int fixed = which == 0 ? m.e1 : m.e2, free = which == 0 ? m.e2 : m.e1;
            K term = c;
            for (int i = 0; i < fixed; ++i) term *= value;
            if (v.size() <= static_cast<std::size_t>(free)) v.resize(static_cast<std::size_t>(free) + 1, K(0));
            v[static_cast<std::size_t>(free)] += term;
        }
        return UniPoly<K>(std::move(v));
    }

    template <class Fn>
    auto map(Fn&& fn) const {
        using L = decltype(fn(std::declval<const K&>()));
        BiPoly<L> r;
        for (const auto& [m, c] : t_) r += BiPoly<L>::term(fn(c), m.e1, m.e2);
        return r;
    }

    /// Scales so that the first term in graded order has coefficient 1.
    BiPoly normalized() const {
        if (t_.empty()) return *this;
        return (K(1) / t_.begin()->second) * *this;
    }

    /// Text in graded descending order, or ascending (local) order when
    /// `ascending` is set; ties always put higher powers of the first
    /// variable first.
    std::string to_string(const std::array<std::string, 2>& names = {"x", "y"}, bool ascending = false) const {
        if (t_.empty()) return "0";
        std::vector<std::pair<Monomial, const K*>> order;
        for (const auto& [m, c] : t_) order.emplace_back(m, &c);
        if (ascending)
            std::stable_sort(order.begin(), order.end(),
                             [](const auto& a, const auto& b) { return a.first.degree() < b.first.degree(); });
        std::string out;
        for (const auto& [m, cp] : order) {
            const K& c = *cp;
            std::string cs = detail::coeff_text(c);
            bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
            if (neg) cs = cs.substr(1);
            if (cs.find_first_of("+-") != std::string::npos) cs = "(" + cs + ")";
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string mono;
            auto power = [&](const std::string& n, int e) {
                if (e == 0) return;
                if (!mono.empty()) mono += "*";
                mono += e == 1 ? n : n + "^" + std::to_string(e);
            };
            power(names[0], m.e1);
            power(names[1], m.e2);
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
    Terms t_;

    void add_term(const Monomial& m, const K& c) {
        if (detail::coeff_is_zero(c)) return;
        auto [it, inserted] = t_.try_emplace(m, c);
        if (inserted) return;
        it->second += c;
        if (detail::coeff_is_zero(it->second)) t_.erase(it);
    }
};

template <class K>
bool is_zero(const BiPoly<K>& p) {
    return p.is_zero();
}

}  // namespace atinf

#endif
