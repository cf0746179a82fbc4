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

#ifndef ATINF_ALGEBRA_BIVARIATE_HPP
#define ATINF_ALGEBRA_BIVARIATE_HPP

#include <utility>
#include <vector>

#include "bipoly.hpp"
#include "unipoly.hpp"

namespace atinf {

namespace detail {

// Polynomials in a main variable with coefficients in D = K[w], low to high.
template <class K>
using DPoly = std::vector<UniPoly<K>>;

template <class K>
void dtrim(DPoly<K>& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

template <class K>
int ddeg(const DPoly<K>& a) {
    return static_cast<int>(a.size()) - 1;
}

/// Pseudo-remainder: lc(B)^(deg A - deg B + 1) A mod B.
template <class K>
DPoly<K> prem(DPoly<K> a, const DPoly<K>& b) {
    int db = ddeg(b);
    const UniPoly<K>& lb = b.back();
    int e = ddeg(a) - db + 1;
    while (ddeg(a) >= db) {
        int shift = ddeg(a) - db;
        UniPoly<K> la = a.back();
        for (auto& c : a) c = lb * c;
        for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= la * b[static_cast<std::size_t>(j)];
        dtrim(a);
        --e;
    }
    if (e > 0) {
        UniPoly<K> s = lb.pow(e);
        for (auto& c : a) c = s * c;
    }
    return a;
}

template <class K>
UniPoly<K> dcontent(const DPoly<K>& a) {
    UniPoly<K> g;
    for (const auto& c : a) {
        g = gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

template <class K>
DPoly<K> dprimitive(DPoly<K> a) {
    if (a.empty()) return a;
    UniPoly<K> c = dcontent(a);
    if (c.degree() > 0)
        for (auto& x : a) x = divide_exact(x, c);
    return a;
}

}  // namespace detail

/// Resultant with respect to variable `main` (0 or 1), by the subresultant
/// remainder sequence over K[other]. The result is a polynomial in the
/// other variable, embedded as a BiPoly.
template <class K>
BiPoly<K> resultant(const BiPoly<K>& f, const BiPoly<K>& g, int main) {
    using namespace detail;
    int other = 1 - main;
    if (f.is_zero() || g.is_zero()) return {};
    DPoly<K> a = f.as_univariate(main), b = g.as_univariate(main);
    int s = 1;
    if (ddeg(a) < ddeg(b)) {
        if ((ddeg(a) % 2) && (ddeg(b) % 2)) s = -s;
        std::swap(a, b);
    }
    if (ddeg(b) == 0) return BiPoly<K>::from_poly(b[0].pow(ddeg(a)), other);
    UniPoly<K> gg(K(1)), h(K(1));
    while (true) {
        int delta = ddeg(a) - ddeg(b);
        DPoly<K> r = prem(a, b);
        if (r.empty()) return {};
        if ((ddeg(a) % 2) && (ddeg(b) % 2)) s = -s;
        a = std::move(b);
        UniPoly<K> div = gg * h.pow(delta);
        for (auto& c : r) c = divide_exact(c, div);
        b = std::move(r);
        gg = a.back();
        if (delta > 0) h = divide_exact(gg.pow(delta), h.pow(delta - 1));
        if (ddeg(b) == 0) break;
    }
    int da = ddeg(a);
    UniPoly<K> res = da == 0 ? UniPoly<K>(K(1)) : divide_exact(b[0].pow(da), h.pow(da - 1));
    if (s < 0) res = -res;
    return BiPoly<K>::from_poly(res, other);
}

/// Exact quotient f / g; throws InexactDivision otherwise.
template <class K>
BiPoly<K> divide_exact(const BiPoly<K>& f, const BiPoly<K>& g) {
    using namespace detail;
    if (g.is_zero()) throw DivisionByZero("bivariate division by zero");
    if (f.is_zero()) return {};
    DPoly<K> a = f.as_univariate(0), b = g.as_univariate(0);
    int db = ddeg(b);
    if (ddeg(a) < db) throw InexactDivision("bivariate division leaves a remainder");
    DPoly<K> q(static_cast<std::size_t>(ddeg(a) - db + 1));
    while (!a.empty() && ddeg(a) >= db) {
        int shift = ddeg(a) - db;
        UniPoly<K> c = divide_exact(a.back(), b.back());
        q[static_cast<std::size_t>(shift)] = c;
        for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= c * b[static_cast<std::size_t>(j)];
        dtrim(a);
    }
    if (!a.empty()) throw InexactDivision("bivariate division leaves a remainder");
    return BiPoly<K>::from_univariate(q, 0);
}

/// Greatest common divisor in K[x, y], normalized so that its leading term
/// in graded order has coefficient 1. gcd(0, 0) = 0.
template <class K>
BiPoly<K> gcd(const BiPoly<K>& f, const BiPoly<K>& g) {
    using namespace detail;
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    DPoly<K> a = f.as_univariate(0), b = g.as_univariate(0);
    UniPoly<K> c = gcd(dcontent(a), dcontent(b));
    a = dprimitive(std::move(a));
    b = dprimitive(std::move(b));
    if (ddeg(a) < ddeg(b)) std::swap(a, b);
    while (ddeg(b) > 0) {
        DPoly<K> r = prem(a, b);
        a = std::move(b);
        b = dprimitive(std::move(r));
    }
    DPoly<K> pp = b.empty() ? a : DPoly<K>{UniPoly<K>(K(1))};
    pp = dprimitive(std::move(pp));
    for (auto& x : pp) x = c * x;
    return BiPoly<K>::from_univariate(pp, 0).normalized();
}

/// Content with respect to `main`: gcd of the coefficients, a polynomial in
/// the other variable.
template <class K>
UniPoly<K> content_in(const BiPoly<K>& f, int main) {
    return detail::dcontent(f.as_univariate(main));
}

/// Yun decomposition with respect to variable `main` of the primitive part
/// of f: returns A_1, A_2, ... with pp(f) = const * prod A_i^i.
template <class K>
std::vector<BiPoly<K>> squarefree_decomposition_in(const BiPoly<K>& f, int main) {
    std::vector<BiPoly<K>> out;
    if (f.degree_in(main) <= 0) return out;
    BiPoly<K> a = divide_exact(f, BiPoly<K>::from_poly(content_in(f, main), 1 - main));
    BiPoly<K> da = a.partial(main);
    BiPoly<K> g = gcd(a, da);
    BiPoly<K> b = divide_exact(a, g);
    BiPoly<K> c = divide_exact(da, g);
    BiPoly<K> d = c - b.partial(main);
    while (b.degree_in(main) > 0) {
        BiPoly<K> ai = gcd(b, d);
        out.push_back(ai);
        b = divide_exact(b, ai);
        c = divide_exact(d, ai);
        d = c - b.partial(main);
    }
    while (!out.empty() && out.back().degree_in(main) <= 0) out.pop_back();
    return out;
}

}  // namespace atinf

#endif
