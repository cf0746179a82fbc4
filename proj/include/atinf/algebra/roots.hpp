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

#ifndef ATINF_ALGEBRA_ROOTS_HPP
#define ATINF_ALGEBRA_ROOTS_HPP

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <vector>

#include "rational.hpp"
#include "unipoly.hpp"

namespace atinf {

namespace detail {

inline mpz_class pollard_brent(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1, m = 64;
        auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    mpz_class diff = abs(x - y);
                    q = (q * diff) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(mpz_class(abs(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
    if (n < 2) return;
    for (unsigned long p = 2; p < 2000; ++p) {
        if (n == 1) return;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

/// Positive divisors of |n| (n != 0), ascending.
inline std::vector<mpz_class> divisors(const mpz_class& n) {
    std::map<mpz_class, int> fac;
    detail::factor_into(abs(n), fac);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac) {
        std::size_t base = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

/// Integer coefficients of c * A with c > 0 chosen so the content is 1.
inline std::vector<mpz_class> primitive_integer_form(const UniPoly<Rational>& a) {
    mpz_class l = 1;
    for (const auto& c : a.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den_mpz_t());
    std::vector<mpz_class> z;
    mpz_class g = 0;
    for (const auto& c : a.coefficients()) {
        z.push_back(c.num() * (l / c.den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
    }
    if (g != 0 && g != 1)
        for (auto& v : z) v /= g;
    return z;
}

struct RationalRoot {
    Rational root;
    int multiplicity;
    friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

struct RootSplit {
    std::vector<RationalRoot> roots;  ///< ascending by value
    UniPoly<Rational> residual;       ///< monic, no rational roots
};

namespace detail {

inline std::vector<Rational> rational_roots_of_squarefree(const UniPoly<Rational>& a) {
    std::vector<Rational> roots;
    if (a.degree() <= 0) return roots;
    std::vector<mpz_class> z = primitive_integer_form(a);
    std::size_t low = 0;
    while (z[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    std::vector<mpz_class> w(z.begin() + static_cast<long>(low), z.end());
    if (w.size() <= 1) return roots;
    auto eval_hom = [&](const mpz_class& p, const mpz_class& q) {
        // q^n * w(p/q)
        mpz_class acc = 0, qpow = 1;
        std::vector<mpz_class> qp(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            qp[i] = qpow;
            qpow *= q;
        }
        mpz_class ppow = 1;
        for (std::size_t i = 0; i < w.size(); ++i) {
            acc += w[i] * ppow * qp[w.size() - 1 - i];
            ppow *= p;
        }
        return acc;
    };
    if (w.size() == 2) {
        roots.emplace_back(mpz_class(-w[0]), w[1]);
    } else {
        auto pd = divisors(w.front());
        auto qd = divisors(w.back());
        for (const auto& q : qd)
            for (const auto& p : pd) {
                if (gcd(p, q) != 1) continue;
                for (int s : {1, -1}) {
                    mpz_class ps = s * p;
                    if (eval_hom(ps, q) == 0) roots.emplace_back(ps, q);
                }
            }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace detail

/// Splits a nonzero polynomial over Q into its rational roots (with
/// multiplicity) and a monic residual free of rational roots, so that
/// A = lc(A) * prod (t - r_i)^m_i * residual.
inline RootSplit uni_squarefree_and_roots(const UniPoly<Rational>& a) {
    if (a.is_zero()) throw ZeroPolynomial("root finding on the zero polynomial");
    RootSplit out;
    UniPoly<Rational> residual = a.monic();
    auto parts = squarefree_decomposition(a);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int mult = static_cast<int>(i) + 1;
        for (const Rational& r : detail::rational_roots_of_squarefree(parts[i])) {
            out.roots.push_back({r, mult});
            UniPoly<Rational> lin{-r, Rational(1)};
            for (int k = 0; k < mult; ++k) residual = divide_exact(residual, lin);
        }
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const auto& x, const auto& y) { return x.root < y.root; });
    out.residual = residual;
    return out;
}

/// Distinct rational roots only.
inline std::vector<Rational> rational_roots(const UniPoly<Rational>& a) {
    std::vector<Rational> r;
    if (a.is_zero() || a.degree() == 0) return r;
    for (const auto& rr : uni_squarefree_and_roots(a).roots) r.push_back(rr.root);
    return r;
}

}  // namespace atinf

#endif
