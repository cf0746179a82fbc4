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

#ifndef ATINF_RESOLVE_HPP
#define ATINF_RESOLVE_HPP

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chart.hpp"

namespace atinf {

struct ResolveOptions {
    int max_blowups = 256;
};

/// Behaviour of a lifted map along an exceptional curve: constant c with
/// (map - c) vanishing to order m, or dicritical of the given degree.
struct Annotation {
    enum class Kind { Constant, Dicritical, Zero };  ///< Zero: the map is identically 0
    Kind kind = Kind::Constant;
    bool infinite = false;
    Rational value;
    int m = 0;
    int degree = 0;

    bool is_constant(const Rational& c) const { return kind == Kind::Zero || (kind == Kind::Constant && !infinite && value == c); }
    bool is_infinite() const { return kind == Kind::Constant && infinite; }
    std::string to_string() const {
        if (kind == Kind::Dicritical) return "dicr:" + std::to_string(degree);
        if (kind == Kind::Zero) return "0^inf";
        return (infinite ? std::string("inf") : value.to_string()) + "^" + std::to_string(m);
    }
};

/// Rational map num/den in chart coordinates, coprime.
struct ChartMap {
    QBiPoly num, den;
};

/// Affine chart (a, b) of the blown-up surface. The root chart has
/// coordinates (u, v) at p; a child of kind 1 is a = A + a1, b = B + a1 b1,
/// one of kind 2 is a = A + a2 b2, b = B + b2, where (A, B) is the center.
struct Chart {
    int id = 0;
    int parent = -1;
    int kind = 0;
    Rational center_a, center_b;       ///< in parent coordinates
    int curve = -1;                    ///< exceptional curve born in this chart
    QBiPoly U, V;                      ///< u, v as polynomials in the chart coordinates
    std::vector<ChartMap> maps;
    std::vector<std::pair<int, QBiPoly>> curves;          ///< visible curves and local equations
    std::vector<std::pair<Rational, Rational>> blown;     ///< centers blown up here

    bool is_blown(const Rational& a, const Rational& b) const {
        return std::find(blown.begin(), blown.end(), std::make_pair(a, b)) != blown.end();
    }
};

/// Curve 0 is the strict transform of the line at infinity; the others are
/// exceptional.
struct ResolutionCurve {
    int id = 0;
    bool exceptional = true;
    int chart1 = -1, chart2 = -1;
    std::vector<Annotation> annotations;  ///< one per resolved map
};

struct Obstruction {
    int curve = 0;
    QPoly centers;  ///< irrational indeterminacy points, as roots in the chart coordinate b
    std::string to_string() const { return "E" + std::to_string(curve) + ": " + centers.to_string("b"); }
};

/// Strict transform of a level curve meeting an exceptional curve.
struct Arrow {
    int curve = 0;
    std::string label;  ///< "t" for the generic fiber, else the value
};

struct Resolution {
    PointAtInfinity point;
    int d = 0;
    std::vector<std::string> map_names;
    std::vector<Chart> charts;
    std::vector<ResolutionCurve> curves;
    std::set<std::pair<int, int>> edges;
    std::vector<Obstruction> obstructions;
    std::vector<Arrow> arrows;
    bool truncated = false;

    bool complete() const { return obstructions.empty() && !truncated; }
    int exceptional_count() const { return static_cast<int>(curves.size()) - 1; }
};

namespace detail {

inline QBiPoly strip_var(const QBiPoly& p, int which) {
    if (p.is_zero()) return p;
    int k = p.order_in(which);
    return which == 0 ? p.unshifted(k, 0) : p.unshifted(0, k);
}

/// Removes every factor h from p.
inline QBiPoly strip_factor(QBiPoly p, const QBiPoly& h) {
    if (h.is_constant() || p.is_zero()) return p;
    while (true) {
        try {
            p = divide_exact(p, h);
        } catch (const InexactDivision&) {
            return p;
        }
    }
}

inline QBiPoly chart_substitute(const QBiPoly& p, const Rational& A, const Rational& B, int kind) {
    QBiPoly a = QBiPoly::var(0), b = QBiPoly::var(1);
    QBiPoly X = kind == 1 ? a : a * b;
    QBiPoly Y = kind == 1 ? a * b : b;
    return p.compose(QBiPoly(A) + X, QBiPoly(B) + Y);
}

inline Annotation annotate(const ChartMap& m) {
    Annotation an;
    if (m.num.is_zero()) {
        an.kind = Annotation::Kind::Zero;
        return an;
    }
    int on = m.num.order_in(0), od = m.den.order_in(0);
    if (on > 0) {
        an.m = on;
        return an;
    }
    if (od > 0) {
        an.infinite = true;
        an.m = od;
        return an;
    }
    QPoly n0 = m.num.restrict_to(0, Rational(0)), d0 = m.den.restrict_to(0, Rational(0));
    Rational c = n0.lc() / d0.lc();
    if (n0 == c * d0) {
        an.value = c;
        an.m = (m.num - QBiPoly(c) * m.den).order_in(0);
        return an;
    }
    QPoly g = gcd(n0, d0);
    an.kind = Annotation::Kind::Dicritical;
    an.degree = std::max(divide_exact(n0, g).degree(), divide_exact(d0, g).degree());
    return an;
}

inline bool indeterminate_at(const ChartMap& m, const Rational& a, const Rational& b) {
    return m.num(a, b).is_zero() && m.den(a, b).is_zero();
}

/// Removes the factors b - beta for the given roots.
inline QPoly remove_roots(QPoly p, const std::vector<Rational>& roots) {
    for (const auto& r : roots) {
        QPoly lin{-r, Rational(1)};
        while (p.degree() > 0 && p(r).is_zero()) p = divide_exact(p, lin);
    }
    return p;
}

inline std::vector<Rational> blown_on_line(const Chart& c) {
    std::vector<Rational> out;
    for (const auto& [a, b] : c.blown)
        if (a.is_zero()) out.push_back(b);
    return out;
}

class Resolver {
   public:
    Resolver(Resolution& r, const ResolveOptions& o) : res_(r), opt_(o) {}

    void run() {
        std::deque<std::pair<int, std::pair<Rational, Rational>>> queue;
        queue.push_back({0, {Rational(0), Rational(0)}});
        int blowups = 0;
        while (!queue.empty()) {
            auto [cid, pt] = queue.front();
            queue.pop_front();
            if (++blowups > opt_.max_blowups) {
                res_.truncated = true;
                return;
            }
            blow_up(cid, pt.first, pt.second, queue);
        }
    }

   private:
    Resolution& res_;
    const ResolveOptions& opt_;

    Chart child(const Chart& c, const Rational& A, const Rational& B, int kind, int curve) {
        Chart ch;
        ch.id = static_cast<int>(res_.charts.size());
        ch.parent = c.id;
        ch.kind = kind;
        ch.center_a = A;
        ch.center_b = B;
        ch.curve = curve;
        int e = kind == 1 ? 0 : 1;
        ch.U = chart_substitute(c.U, A, B, kind);
        ch.V = chart_substitute(c.V, A, B, kind);
        for (const auto& m : c.maps) {
            QBiPoly n = chart_substitute(m.num, A, B, kind), d = chart_substitute(m.den, A, B, kind);
            if (n.is_zero()) {
                ch.maps.push_back({n, QBiPoly(Rational(1))});
                continue;
            }
            int k = std::min(n.order_in(e), d.order_in(e));
            ch.maps.push_back(
                {e == 0 ? n.unshifted(k, 0) : n.unshifted(0, k), e == 0 ? d.unshifted(k, 0) : d.unshifted(0, k)});
        }
        for (const auto& [id, h] : c.curves) {
            QBiPoly s = strip_var(chart_substitute(h, A, B, kind), e);
            if (!s.is_constant()) ch.curves.emplace_back(id, s);
        }
        ch.curves.emplace_back(curve, QBiPoly::var(e));
        return ch;
    }

    void blow_up(int cid, const Rational& A, const Rational& B,
                 std::deque<std::pair<int, std::pair<Rational, Rational>>>& queue) {
        res_.charts[static_cast<std::size_t>(cid)].blown.emplace_back(A, B);
        Chart c = res_.charts[static_cast<std::size_t>(cid)];
        int eid = static_cast<int>(res_.curves.size());
        std::vector<int> through;
        for (const auto& [id, h] : c.curves)
            if (h(A, B).is_zero()) through.push_back(id);
        for (std::size_t i = 0; i < through.size(); ++i)
            for (std::size_t j = i + 1; j < through.size(); ++j)
                res_.edges.erase({std::min(through[i], through[j]), std::max(through[i], through[j])});
        for (int id : through) res_.edges.insert({std::min(id, eid), std::max(id, eid)});

        Chart c1 = child(c, A, B, 1, eid);
        Chart c2 = child(c, A, B, 2, eid);
        c2.id = c1.id + 1;
        ResolutionCurve E;
        E.id = eid;
        E.chart1 = c1.id;
        E.chart2 = c2.id;
        for (const auto& m : c1.maps) E.annotations.push_back(annotate(m));
        res_.curves.push_back(E);

        std::vector<Rational> centers;
        QPoly irrational(Rational(1));
        for (const auto& m : c1.maps) {
            if (m.num.is_zero()) continue;
            QPoly g = gcd(m.num.restrict_to(0, Rational(0)), m.den.restrict_to(0, Rational(0)));
            if (g.degree() <= 0) continue;
            auto split = uni_squarefree_and_roots(g);
            for (const auto& r : split.roots)
                if (std::find(centers.begin(), centers.end(), r.root) == centers.end()) centers.push_back(r.root);
            if (split.residual.degree() > 0) irrational = irrational * squarefree_part(split.residual);
        }
        irrational = squarefree_part(irrational);
        if (irrational.degree() > 0) res_.obstructions.push_back({eid, irrational});
        std::sort(centers.begin(), centers.end());
        bool origin2 = false;
        for (const auto& m : c2.maps)
            if (!m.num.is_zero() && indeterminate_at(m, Rational(0), Rational(0))) origin2 = true;
        res_.charts.push_back(std::move(c1));
        res_.charts.push_back(std::move(c2));
        for (const auto& b : centers) queue.push_back({res_.charts[res_.charts.size() - 2].id, {Rational(0), b}});
        if (origin2) queue.push_back({res_.charts.back().id, {Rational(0), Rational(0)}});
    }
};

inline std::vector<ChartMap> root_maps(const QBiPoly& f_std, int d, bool with_partials) {
    auto hat_to = [](const QBiPoly& g, int deg) {
        QBiPoly h;
        for (const auto& [m, c] : g.terms()) h += QBiPoly::term(c, m.e2, deg - m.e1 - m.e2);
        return h;
    };
    std::vector<ChartMap> maps;
    auto add = [&](const QBiPoly& g, int deg) {
        if (g.is_zero()) {
            maps.push_back({QBiPoly(), QBiPoly(Rational(1))});
            return;
        }
        QBiPoly n = hat_to(g, deg), den = QBiPoly::term(Rational(1), 0, deg);
        QBiPoly h = gcd(n, den);
        maps.push_back({divide_exact(n, h), divide_exact(den, h)});
    };
    add(f_std, d);
    if (with_partials) {
        add(f_std.partial(0), d - 1);
        add(f_std.partial(1), d - 1);
    }
    return maps;
}

/// Points of an exceptional curve in its birth charts: the affine line
/// a1 = 0 of chart 1 (coordinate b) and the origin of chart 2. Points that
/// were blown up later are excluded.
struct CurvePoints {
    std::vector<Rational> rational;  ///< b-coordinates on the line of chart 1
    QPoly irrational;                ///< squarefree, roots are further points on that line
    bool origin2 = false;
};

/// Zeros on the curve of a polynomial given on chart 1 (restricted to the
/// curve) and its value at the chart 2 origin.
inline CurvePoints curve_points(const Chart& c1, const Chart& c2, const QPoly& on_line, bool zero_at_origin2) {
    CurvePoints out;
    out.irrational = QPoly(Rational(1));
    if (on_line.is_zero()) throw InternalInconsistency("polynomial vanishes along an exceptional curve");
    QPoly p = remove_roots(on_line, blown_on_line(c1));
    if (p.degree() > 0) {
        auto split = uni_squarefree_and_roots(p);
        for (const auto& r : split.roots) out.rational.push_back(r.root);
        out.irrational = squarefree_part(split.residual);
    }
    out.origin2 = zero_at_origin2 && !c2.is_blown(Rational(0), Rational(0));
    return out;
}

/// Strict transform of {map = c} in a chart: remove the local equations of
/// curves along which the map is constant c. An infinite c uses the
/// denominator.
inline QBiPoly level_strict_transform(const Resolution& res, const Chart& ch, int map, const Rational* c) {
    const ChartMap& m = ch.maps[static_cast<std::size_t>(map)];
    QBiPoly s = c ? m.num - QBiPoly(*c) * m.den : m.den;
    for (const auto& [id, h] : ch.curves) {
        if (id == 0) {
            if (!c) s = strip_factor(s, h);
            continue;
        }
        const Annotation& an = res.curves[static_cast<std::size_t>(id)].annotations[static_cast<std::size_t>(map)];
        if (c ? an.is_constant(*c) : an.is_infinite()) s = strip_factor(s, h);
    }
    return s;
}

}  // namespace detail

/// Blows up the indeterminacy points of the lifted maps over p until every
/// map is defined, or records why it stopped.
inline Resolution resolve(const QBiPoly& f, const PointAtInfinity& p, bool with_partials,
                          const ResolveOptions& opt = {}) {
    Resolution res;
    StandardForm s = detail::standard_for(f, p, res.point);
    res.d = s.f.total_degree();
    res.map_names = with_partials ? std::vector<std::string>{"f", "f_x", "f_y"} : std::vector<std::string>{"f"};
    Chart root;
    root.U = QBiPoly::var(0);
    root.V = QBiPoly::var(1);
    root.maps = detail::root_maps(s.f, res.d, with_partials);
    root.curves.emplace_back(0, QBiPoly::var(1));
    res.charts.push_back(root);
    ResolutionCurve linf;
    linf.exceptional = false;
    res.curves.push_back(linf);
    detail::Resolver(res, opt).run();

    // arrows: the generic fiber on dicritical curves and f = 0 on the exceptional set
    for (std::size_t j = 1; j < res.curves.size(); ++j) {
        const auto& E = res.curves[j];
        const Annotation& an = E.annotations[0];
        if (an.kind == Annotation::Kind::Dicritical)
            for (int k = 0; k < an.degree; ++k) res.arrows.push_back({E.id, "t"});
        const Chart& c1 = res.charts[static_cast<std::size_t>(E.chart1)];
        const Chart& c2 = res.charts[static_cast<std::size_t>(E.chart2)];
        Rational zero(0);
        QBiPoly s1 = detail::level_strict_transform(res, c1, 0, &zero);
        QBiPoly s2 = detail::level_strict_transform(res, c2, 0, &zero);
        auto pts = detail::curve_points(c1, c2, s1.restrict_to(0, zero), s2(zero, zero).is_zero());
        int count = static_cast<int>(pts.rational.size()) + std::max(0, pts.irrational.degree()) + (pts.origin2 ? 1 : 0);
        for (int k = 0; k < count; ++k) res.arrows.push_back({E.id, "0"});
    }
    return res;
}

/// Resolution of the map f at p (the lift of f to P^1).
inline Resolution resolve_indeterminacy(const QBiPoly& f, const PointAtInfinity& p, const ResolveOptions& opt = {}) {
    return resolve(f, p, false, opt);
}

struct RVerdict {
    enum class Reason { None, SingularStrictTransform, NonTransverseContact, PassesThroughCorner };
    bool holds = true;
    Reason reason = Reason::None;
    int curve = 0;  ///< exceptional curve where the failure was found

    static RVerdict fail(Reason r, int curve) { return {false, r, curve}; }
    std::string reason_name() const {
        switch (reason) {
            case Reason::None: return "None";
            case Reason::SingularStrictTransform: return "SingularStrictTransform";
            case Reason::NonTransverseContact: return "NonTransverseContact";
            case Reason::PassesThroughCorner: return "PassesThroughCorner";
        }
        return "";
    }
    std::string to_string() const { return holds ? "Holds" : "Fails(" + reason_name() + ")"; }
};

/// Smoothness and transversality of the strict transform of f = c along the
/// exceptional set over p.
inline RVerdict condition_R(const Resolution& res, const Rational& c) {
    if (!res.complete())
        throw IncompleteResolution("the resolution at " + res.point.to_string() + " is incomplete");
    for (std::size_t j = 1; j < res.curves.size(); ++j)
        if (res.curves[j].annotations[0].is_constant(c))
            return RVerdict::fail(RVerdict::Reason::NonTransverseContact, static_cast<int>(j));
    const Rational zero(0);
    for (std::size_t j = 1; j < res.curves.size(); ++j) {
        const auto& E = res.curves[j];
        const Chart& c1 = res.charts[static_cast<std::size_t>(E.chart1)];
        const Chart& c2 = res.charts[static_cast<std::size_t>(E.chart2)];
        auto other_through = [&](const Chart& ch, const Rational& a, const Rational& b) {
            for (const auto& [id, h] : ch.curves)
                if (id != E.id && id != 0 && h(a, b).is_zero()) return true;
            return false;
        };
        QBiPoly s = detail::level_strict_transform(res, c1, 0, &c);
        QBiPoly sa = s.partial(0), sb = s.partial(1);
        QPoly on = s.restrict_to(0, zero);
        QPoly rest = detail::remove_roots(on, detail::blown_on_line(c1));
        if (rest.degree() > 0) {
            auto split = uni_squarefree_and_roots(rest);
            for (const auto& r : split.roots) {
                if (other_through(c1, zero, r.root))
                    return RVerdict::fail(RVerdict::Reason::PassesThroughCorner, E.id);
                if (sa(zero, r.root).is_zero() && sb(zero, r.root).is_zero())
                    return RVerdict::fail(RVerdict::Reason::SingularStrictTransform, E.id);
                if (r.multiplicity > 1) return RVerdict::fail(RVerdict::Reason::NonTransverseContact, E.id);
            }
            QPoly res_part = split.residual;
            if (res_part.degree() > 0) {
                QPoly g = gcd(gcd(res_part, sa.restrict_to(0, zero)), sb.restrict_to(0, zero));
                if (g.degree() > 0) return RVerdict::fail(RVerdict::Reason::SingularStrictTransform, E.id);
                if (squarefree_part(res_part).degree() != res_part.degree())
                    return RVerdict::fail(RVerdict::Reason::NonTransverseContact, E.id);
            }
        }
        if (!c2.is_blown(zero, zero)) {
            QBiPoly s2 = detail::level_strict_transform(res, c2, 0, &c);
            if (s2(zero, zero).is_zero()) {
                if (other_through(c2, zero, zero)) return RVerdict::fail(RVerdict::Reason::PassesThroughCorner, E.id);
                if (s2.partial(0)(zero, zero).is_zero() && s2.partial(1)(zero, zero).is_zero())
                    return RVerdict::fail(RVerdict::Reason::SingularStrictTransform, E.id);
                if (s2.restrict_to(1, zero).order() > 1)
                    return RVerdict::fail(RVerdict::Reason::NonTransverseContact, E.id);
            }
        }
    }
    return {};
}

inline RVerdict condition_R(const QBiPoly& f, const PointAtInfinity& p, const Rational& c,
                            const ResolveOptions& opt = {}) {
    Resolution res = resolve_indeterminacy(f, p, opt);
    if (!res.obstructions.empty())
        throw IrrationalCenter("indeterminacy point with irrational coordinates on " + res.obstructions[0].to_string());
    return condition_R(res, c);
}

/// G_{p,c}: exceptional curves contained in it and its isolated points.
struct GSet {
    std::vector<int> curves;
    struct Point {
        int curve = 0;
        bool origin2 = false;
        Rational b;   ///< rational points
        QPoly cls;    ///< conjugate classes (degree = number of points)
        int count() const { return cls.degree() > 0 ? cls.degree() : 1; }
    };
    std::vector<Point> points;
    int components = 0;
};

/// Builds G_{p,c} on a resolution of (f, f_x, f_y); c null means infinity.
inline GSet g_set(const Resolution& res, const Rational* c) {
    if (res.map_names.size() < 3) throw std::invalid_argument("G set needs a resolution of f, f_x and f_y");
    if (!res.obstructions.empty())
        throw IrrationalCenter("indeterminacy point with irrational coordinates on " + res.obstructions[0].to_string());
    if (res.truncated) throw IncompleteResolution("blowup budget exhausted at " + res.point.to_string());
    const Rational zero(0);
    auto value_is = [&](const Annotation& an) { return c ? an.is_constant(*c) : an.is_infinite(); };
    auto other_constant = [&](const Annotation& an) {
        return an.kind == Annotation::Kind::Constant && !value_is(an);
    };
    std::size_t n = res.curves.size();
    std::vector<char> contained(n, 0);
    GSet G;
    for (std::size_t j = 1; j < n; ++j) {
        const auto& A = res.curves[j].annotations;
        if (value_is(A[0]) && A[1].is_constant(zero) && A[2].is_constant(zero)) {
            contained[j] = 1;
            G.curves.push_back(static_cast<int>(j));
        }
    }
    // union-find over curves [0, n) and points [n, ...)
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
    int singles = 0;
    for (const auto& [a, b] : res.edges)
        if (contained[static_cast<std::size_t>(a)] && contained[static_cast<std::size_t>(b)]) unite(a, b);

    for (std::size_t j = 1; j < n; ++j) {
        if (contained[j]) continue;
        const auto& E = res.curves[j];
        const auto& A = E.annotations;
        if (other_constant(A[0])) continue;
        bool skip = false;
        for (int k = 1; k <= 2; ++k)
            if (A[static_cast<std::size_t>(k)].kind == Annotation::Kind::Constant && !A[static_cast<std::size_t>(k)].is_constant(zero))
                skip = true;
        if (skip) continue;
        const Chart& c1 = res.charts[static_cast<std::size_t>(E.chart1)];
        const Chart& c2 = res.charts[static_cast<std::size_t>(E.chart2)];
        auto polys = [&](const Chart& ch, std::vector<QBiPoly>& out) {
            const auto& m = ch.maps;
            if (!value_is(A[0])) out.push_back(c ? m[0].num - QBiPoly(*c) * m[0].den : m[0].den);
            for (int k = 1; k <= 2; ++k)
                if (!A[static_cast<std::size_t>(k)].is_constant(zero)) out.push_back(m[static_cast<std::size_t>(k)].num);
        };
        std::vector<QBiPoly> p1, p2;
        polys(c1, p1);
        polys(c2, p2);
        QPoly g;
        for (const auto& p : p1) g = gcd(g, p.restrict_to(0, zero));
        bool at2 = true;
        for (const auto& p : p2) at2 = at2 && p(zero, zero).is_zero();
        auto pts = detail::curve_points(c1, c2, g.is_zero() ? QPoly(Rational(1)) : g, at2);
        auto add_point = [&](GSet::Point pt, const Chart& ch, const Rational& a, const Rational& b, bool rational) {
            int node = static_cast<int>(parent.size());
            parent.push_back(node);
            G.points.push_back(pt);
            if (!rational) {
                singles += pt.count() - 1;
                return;
            }
            for (const auto& [id, h] : ch.curves)
                if (id != E.id && id != 0 && contained[static_cast<std::size_t>(id)] && h(a, b).is_zero()) unite(node, id);
        };
        for (const auto& b : pts.rational) add_point({E.id, false, b, {}}, c1, zero, b, true);
        if (pts.irrational.degree() > 0) add_point({E.id, false, zero, pts.irrational}, c1, zero, zero, false);
        if (pts.origin2) add_point({E.id, true, zero, {}}, c2, zero, zero, true);
    }
    std::set<int> roots;
    for (std::size_t j = 1; j < n; ++j)
        if (contained[j]) roots.insert(find(static_cast<int>(j)));
    for (std::size_t k = n; k < parent.size(); ++k) roots.insert(find(static_cast<int>(k)));
    G.components = static_cast<int>(roots.size()) + singles;
    return G;
}

/// Number of connected components of G_{p,c}.
inline long g_tilde(const QBiPoly& f, const PointAtInfinity& p, const Rational& c, const ResolveOptions& opt = {}) {
    return g_set(resolve(f, p, true, opt), &c).components;
}

inline long g_tilde_infinity(const QBiPoly& f, const PointAtInfinity& p, const ResolveOptions& opt = {}) {
    return g_set(resolve(f, p, true, opt), nullptr).components;
}

/// Dual graph in DOT: exceptional curves labeled by the annotation of f,
/// the line at infinity, and arrowheads for strict transforms.
inline std::string dual_graph_dot(const Resolution& res) {
    std::ostringstream os;
    os << "graph resolution {\n";
    os << "  L [label=\"L_inf\", shape=box];\n";
    for (std::size_t j = 1; j < res.curves.size(); ++j)
        os << "  E" << j << " [label=\"" << res.curves[j].annotations[0].to_string() << "\"];\n";
    auto name = [](int id) { return id == 0 ? std::string("L") : "E" + std::to_string(id); };
    for (const auto& [a, b] : res.edges) os << "  " << name(a) << " -- " << name(b) << ";\n";
    for (std::size_t k = 0; k < res.arrows.size(); ++k) {
        os << "  S" << k + 1 << " [shape=point];\n";
        os << "  " << name(res.arrows[k].curve) << " -- S" << k + 1 << " [dir=forward, label=\"" << res.arrows[k].label
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace atinf

#endif
