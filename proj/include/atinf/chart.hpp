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

#ifndef ATINF_CHART_HPP
#define ATINF_CHART_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "algebra.hpp"

namespace atinf {

using QPoly = UniPoly<Rational>;
using QBiPoly = BiPoly<Rational>;

/// Point [a, b, 0] of the line at infinity, canonical as [1, b] or [0, 1].
struct PointAtInfinity {
    Rational a, b;
    int multiplicity = 0;  ///< multiplicity of (b x - a y) in the top form

    std::string to_string() const { return "[" + a.to_string() + "," + b.to_string() + ",0]"; }
    /// "a:b", the form accepted by the command line.
    std::string key() const { return a.to_string() + ":" + b.to_string(); }
    friend bool operator==(const PointAtInfinity& p, const PointAtInfinity& q) { return p.a == q.a && p.b == q.b; }
};

/// Conjugate class of non-rational points at infinity: roots of `poly` in
/// the ratio y/x, each with the given multiplicity. `poly` is squarefree
/// with no rational roots.
struct ResidualFactor {
    QPoly poly;
    int multiplicity = 1;
    int degree() const { return poly.degree(); }
};

struct InfinityPoints {
    int degree = 0;
    std::vector<PointAtInfinity> points;
    std::vector<ResidualFactor> residuals;
};

/// Invertible linear substitution (x, y) = (m11 x' + m12 y', m21 x' + m22 y').
struct LinearChange {
    Rational m11{1}, m12{0}, m21{0}, m22{1};

    bool is_identity() const { return m11 == 1 && m12 == 0 && m21 == 0 && m22 == 1; }
    template <class K>
    BiPoly<K> apply(const BiPoly<K>& f) const {
        BiPoly<K> x = K(m11) * BiPoly<K>::var(0) + K(m12) * BiPoly<K>::var(1);
        BiPoly<K> y = K(m21) * BiPoly<K>::var(0) + K(m22) * BiPoly<K>::var(1);
        return f.compose(x, y);
    }
    std::string to_string() const {
        auto lin = [](const Rational& a, const Rational& b) {
            QBiPoly p = QBiPoly::term(a, 1, 0) + QBiPoly::term(b, 0, 1);
            return p.to_string({"x'", "y'"});
        };
        return "x = " + lin(m11, m12) + ", y = " + lin(m21, m22);
    }
};

/// Value of the parameter t: a rational number, the generic t, or infinity.
struct TSpec {
    enum class Kind { Value, Symbolic, Infinity };
    Kind kind = Kind::Symbolic;
    Rational c;

    static TSpec value(const Rational& c) { return {Kind::Value, c}; }
    static TSpec symbolic() { return {Kind::Symbolic, Rational(0)}; }
    static TSpec infinity() { return {Kind::Infinity, Rational(0)}; }
    std::string to_string() const {
        return kind == Kind::Value ? c.to_string() : kind == Kind::Symbolic ? std::string("t") : std::string("inf");
    }
};

/// Local equation at a point at infinity in the coordinates (u, v) with
/// x = 1/v, y = u/v after the point has been moved to [1, 0, 0].
///
/// For t = infinity, `g` is the limit -v^d of g_t / t and `partials()`
/// returns the limit of the pair (g_u, g_v / t).
template <class K>
struct Germ {
    BiPoly<K> g;
    QBiPoly g_hat;  ///< v^d f(1/v, u/v), the t-free part
    PointAtInfinity point;
    LinearChange change;
    TSpec t;
    int d = 0;

    std::pair<BiPoly<K>, BiPoly<K>> partials() const {
        if (t.kind == TSpec::Kind::Infinity) {
            BiPoly<K> gu = g_hat.map([](const Rational& r) { return K(r); }).partial(0);
            return {gu, BiPoly<K>::term(K(static_cast<long>(-d)), 0, d - 1)};
        }
        return {g.partial(0), g.partial(1)};
    }
};

/// Points where the level curves of f meet the line at infinity.
inline InfinityPoints points_at_infinity(const QBiPoly& f) {
    int d = f.total_degree();
    if (d <= 0) throw ConstantPolynomial("polynomial of degree " + std::to_string(d) + " has no points at infinity");
    QBiPoly top = f.homogeneous_part(d);
    InfinityPoints out;
    out.degree = d;
    // top(1, y) = sum c_j y^j; the missing degree is the multiplicity of x
    QPoly h = top.restrict_to(0, Rational(1));
    auto split = uni_squarefree_and_roots(h);
    for (const auto& r : split.roots) out.points.push_back({Rational(1), r.root, r.multiplicity});
    int mx = d - h.degree();
    if (mx > 0) out.points.push_back({Rational(0), Rational(1), mx});
    auto parts = squarefree_decomposition(split.residual);
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].degree() > 0) out.residuals.push_back({parts[i], static_cast<int>(i) + 1});
    return out;
}

/// Multiplicity of (b x - a y) in the top form of f; 0 when p is not a
/// point of f at infinity.
inline int multiplicity_at_infinity(const QBiPoly& f, const Rational& a, const Rational& b) {
    int d = f.total_degree();
    if (d <= 0) return 0;
    QBiPoly top = f.homogeneous_part(d);
    if (a.is_zero()) return top.order_in(0);
    QPoly h = top.restrict_to(0, Rational(1));
    Rational beta = b / a;
    int m = 0;
    QPoly lin{-beta, Rational(1)};
    while (!h.is_zero() && h(beta).is_zero()) {
        h = divide_exact(h, lin);
        ++m;
    }
    return m;
}

/// Canonical point [1, b/a] or [0, 1] for the direction (a, b).
inline PointAtInfinity canonical_point(const QBiPoly& f, const Rational& a, const Rational& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("the direction (0, 0) is not a point");
    PointAtInfinity p = a.is_zero() ? PointAtInfinity{Rational(0), Rational(1), 0}
                                    : PointAtInfinity{Rational(1), b / a, 0};
    p.multiplicity = multiplicity_at_infinity(f, p.a, p.b);
    return p;
}

struct StandardForm {
    QBiPoly f;
    LinearChange change;
};

/// Linear change of coordinates moving p to [1, 0, 0].
inline StandardForm move_to_standard(const QBiPoly& f, const PointAtInfinity& p) {
    StandardForm s;
    if (p.a.is_zero()) {
        s.change = LinearChange{Rational(0), Rational(1), Rational(1), Rational(0)};
        s.f = f.swapped();
    } else if (p.b.is_zero()) {
        s.f = f;
    } else {
        s.change = LinearChange{Rational(1), Rational(0), p.b / p.a, Rational(1)};
        s.f = s.change.apply(f);
    }
    return s;
}

/// v^d f(1/v, u/v) for f already in standard position: x^i y^j -> u^j v^(d-i-j).
inline QBiPoly germ_hat(const QBiPoly& f) {
    int d = f.total_degree();
    QBiPoly g;
    for (const auto& [m, c] : f.terms()) g += QBiPoly::term(c, m.e2, d - m.e1 - m.e2);
    return g;
}

namespace detail {

template <class K>
void check_germ(const Germ<K>& germ) {
    if (germ.t.kind == TSpec::Kind::Infinity) return;
    if (germ.g.order_in(1) > 0) throw InternalInconsistency("germ is divisible by v");
    if (germ.g.order() > germ.point.multiplicity)
        throw InternalInconsistency("germ multiplicity exceeds the multiplicity at infinity");
}

inline StandardForm standard_for(const QBiPoly& f, const PointAtInfinity& p, PointAtInfinity& checked) {
    if (f.total_degree() <= 0) throw ConstantPolynomial();
    checked = canonical_point(f, p.a, p.b);
    if (checked.multiplicity == 0) throw NotAPointOfF(p.to_string() + " is not a point at infinity of the curve");
    return move_to_standard(f, checked);
}

}  // namespace detail

inline Germ<Rational> local_germ_value(const QBiPoly& f, const PointAtInfinity& p, const Rational& c) {
    Germ<Rational> g;
    StandardForm s = detail::standard_for(f, p, g.point);
    g.change = s.change;
    g.d = s.f.total_degree();
    g.g_hat = germ_hat(s.f);
    g.t = TSpec::value(c);
    g.g = g.g_hat - QBiPoly::term(c, 0, g.d);
    detail::check_germ(g);
    return g;
}

inline Germ<RatFunc> local_germ_symbolic(const QBiPoly& f, const PointAtInfinity& p) {
    Germ<RatFunc> g;
    StandardForm s = detail::standard_for(f, p, g.point);
    g.change = s.change;
    g.d = s.f.total_degree();
    g.g_hat = germ_hat(s.f);
    g.t = TSpec::symbolic();
    g.g = g.g_hat.map([](const Rational& r) { return RatFunc(r); }) - BiPoly<RatFunc>::term(RatFunc::t(), 0, g.d);
    detail::check_germ(g);
    return g;
}

inline Germ<Rational> local_germ_infinity(const QBiPoly& f, const PointAtInfinity& p) {
    Germ<Rational> g;
    StandardForm s = detail::standard_for(f, p, g.point);
    g.change = s.change;
    g.d = s.f.total_degree();
    g.g_hat = germ_hat(s.f);
    g.t = TSpec::infinity();
    g.g = QBiPoly::term(Rational(-1), 0, g.d);
    return g;
}

using AnyGerm = std::variant<Germ<Rational>, Germ<RatFunc>>;

inline AnyGerm local_germ(const QBiPoly& f, const PointAtInfinity& p, const TSpec& t) {
    switch (t.kind) {
        case TSpec::Kind::Value: return local_germ_value(f, p, t.c);
        case TSpec::Kind::Symbolic: return local_germ_symbolic(f, p);
        case TSpec::Kind::Infinity: return local_germ_infinity(f, p);
    }
    throw std::invalid_argument("unknown t specification");
}

/// Germ text in u, v.
template <class K>
std::string germ_to_string(const Germ<K>& g) {
    return g.g.to_string({"u", "v"}, true);
}

}  // namespace atinf

#endif
