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

#ifndef ATINF_POLAR_HPP
#define ATINF_POLAR_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "chart.hpp"

namespace atinf {

struct PolarOptions {
    ExtensionBudget budget;
    int trunc = 0;  ///< bound on the series order past v^d; 0 means 4 d^2
};

/// Limit of f along a branch, with the order k of attainment in the branch
/// parameter (the pole order when the limit is infinite).
struct BranchLimit {
    enum class Kind { Value, Algebraic, Infinity };
    Kind kind = Kind::Value;
    Rational value;   ///< Value
    QPoly minpoly;    ///< Algebraic: squarefree, no rational roots
    AlgNum exact;     ///< the limit in the coefficient field of the branch
    int k = 0;

    std::string to_string() const {
        std::string v = kind == Kind::Value       ? value.to_string()
                        : kind == Kind::Infinity ? std::string("inf")
                                                 : "root of " + minpoly.to_string("t");
        return v + " (order " + std::to_string(k) + ")";
    }
};

using Series = std::vector<AlgNum>;

/// Branch of the polar curve at a point at infinity, in the chart x = 1/v,
/// y = u/v around p = [1, 0, 0]:
///
///     v = gamma T^E,   u = u_0 + u_1 T + ... + O(T^precision)
///
/// Coefficients live in `field` (Q when null). The branch stands for
/// residue_degree() conjugate geometric branches, each counted
/// `multiplicity` times in the polar curve.
struct PuiseuxBranch {
    PointAtInfinity point;
    FieldPtr field;
    int ramification = 1;  ///< E
    AlgNum gamma{1};
    Series u;
    int precision = 0;
    bool exact = false;    ///< u is a polynomial, no truncation
    int multiplicity = 1;
    std::optional<BranchLimit> limit;

    /// Expansion state: u = head(T) + delta T^shift Y(T) with tail(T, Y(T)) = 0.
    Series head;
    AlgNum delta{1};
    int shift = 0;
    BiPoly<AlgNum> tail;

    int residue_degree() const { return field ? field->absolute_degree : 1; }
    /// Extends the expansion of u to at least `p` terms.
    void refine(int p);
    std::string to_string() const;
};

/// Conjugate class that needed a larger extension than the budget allows.
struct UnresolvedClass {
    int degree = 0;  ///< absolute degree of the requested extension
    int multiplicity = 1;
};

struct PolarBranches {
    std::vector<PuiseuxBranch> branches;
    std::vector<UnresolvedClass> unresolved;
    int intersection_with_line = 0;  ///< ord_u of the polar equation on v = 0
};

namespace detail {

inline AlgNum apow(const AlgNum& a, long n) {
    if (n < 0) return apow(a.inverse(), -n);
    AlgNum r(1), b = a;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline bool unit(const AlgNum& a) { return !decide_zero(a); }

inline Series series_mul(const Series& a, const Series& b, int n) {
    Series r(static_cast<std::size_t>(n), AlgNum(0));
    for (std::size_t i = 0; i < a.size() && i < r.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < r.size(); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
}

inline Series series_inverse(const Series& a, int n) {
    Series b(static_cast<std::size_t>(n), AlgNum(0));
    AlgNum inv0 = a.at(0).inverse();
    b[0] = inv0;
    for (std::size_t k = 1; k < b.size(); ++k) {
        AlgNum s(0);
        for (std::size_t i = 1; i <= k && i < a.size(); ++i)
            if (!a[i].is_zero()) s += a[i] * b[k - i];
        b[k] = -(s * inv0);
    }
    return b;
}

/// sum_j A_j(X) Y^j mod X^n, by Horner in Y.
inline Series series_eval(const std::vector<UniPoly<AlgNum>>& A, const Series& Y, int n) {
    Series acc(static_cast<std::size_t>(n), AlgNum(0));
    for (std::size_t j = A.size(); j-- > 0;) {
        acc = series_mul(acc, Y, n);
        const auto& c = A[j].coefficients();
        for (std::size_t i = 0; i < c.size() && i < acc.size(); ++i) acc[i] += c[i];
    }
    return acc;
}

/// Root Y(X) with Y(0) = 0 of F(X, Y) = 0, where F_Y(0, 0) is a unit;
/// Newton iteration with doubling precision.
inline Series solve_regular(const BiPoly<AlgNum>& F, int n) {
    auto A = F.as_univariate(1);
    auto dA = F.partial(1).as_univariate(1);
    Series Y{AlgNum(0)};
    int p = 1;
    while (p < n) {
        int p2 = std::min(2 * p, n);
        Y.resize(static_cast<std::size_t>(p2), AlgNum(0));
        Series e = series_eval(A, Y, p2);
        Series dv = series_eval(dA, Y, p2);
        Series corr = series_mul(e, series_inverse(dv, p2), p2);
        for (std::size_t i = 0; i < Y.size(); ++i) Y[i] -= corr[i];
        p = p2;
    }
    Y.resize(static_cast<std::size_t>(n), AlgNum(0));
    return Y;
}

/// g_hat(u(T), gamma T^E) mod T^n.
inline Series eval_along(const QBiPoly& g_hat, const PuiseuxBranch& b, int n) {
    auto B = g_hat.as_univariate(0);
    std::vector<UniPoly<AlgNum>> A;
    for (const auto& bj : B) {
        std::vector<AlgNum> c;
        const auto& bc = bj.coefficients();
        for (std::size_t i = 0; i < bc.size(); ++i) {
            std::size_t at = i * static_cast<std::size_t>(b.ramification);
            if (bc[i].is_zero() || at >= static_cast<std::size_t>(n)) continue;
            if (c.size() <= at) c.resize(at + 1, AlgNum(0));
            c[at] = AlgNum(bc[i]) * apow(b.gamma, static_cast<long>(i));
        }
        A.emplace_back(std::move(c));
    }
    Series u = b.u;
    u.resize(static_cast<std::size_t>(n), AlgNum(0));
    return series_eval(A, u, n);
}

/// Value class of a limit: rational when some rational root of its
/// characteristic polynomial matches, else the squarefree class.
inline BranchLimit classify_value(const AlgNum& c0, int k) {
    BranchLimit L;
    L.exact = c0;
    L.k = k;
    if (c0.is_rational()) {
        L.value = c0.rational();
        return L;
    }
    QPoly cp = charpoly(c0);
    for (const auto& r : rational_roots(cp))
        if (decide_zero(c0 - AlgNum(r))) {
            L.value = r;
            return L;
        }
    L.kind = BranchLimit::Kind::Algebraic;
    L.minpoly = squarefree_part(cp);
    return L;
}

struct LimitContext {
    const QBiPoly* g_hat = nullptr;
    int d = 0;
    int bound = 0;
};

inline BranchLimit compute_limit(PuiseuxBranch& b, const LimitContext& ctx) {
    const int a = b.ramification * ctx.d;
    int extra = 4;
    while (true) {
        int n = b.exact ? ctx.d * std::max<int>(static_cast<int>(b.u.size()), b.ramification) + a + 2 : a + extra;
        if (!b.exact) b.refine(n);
        Series h = eval_along(*ctx.g_hat, b, n);
        int first = -1;
        for (int i = 0; i < n && first < 0; ++i)
            if (unit(h[static_cast<std::size_t>(i)])) first = i;
        if (first >= 0 && first < a) {
            BranchLimit L;
            L.kind = BranchLimit::Kind::Infinity;
            L.k = a - first;
            return L;
        }
        if (first >= 0 && first > a) return classify_value(AlgNum(0), first - a);
        if (first == a) {
            int next = -1;
            for (int i = a + 1; i < n && next < 0; ++i)
                if (unit(h[static_cast<std::size_t>(i)])) next = i;
            AlgNum c0 = h[static_cast<std::size_t>(a)] / apow(b.gamma, ctx.d);
            if (next > 0) return classify_value(c0, next - a);
            if (b.exact) throw DegeneratePolar("f is constant along a component of the polar curve");
        } else if (b.exact) {
            throw DegeneratePolar("f vanishes identically along a component of the polar curve");
        }
        if (extra > ctx.bound)
            throw TruncationExhausted("limit along a polar branch undetermined after " + std::to_string(extra) +
                                      " terms past the pole order bound");
        extra *= 2;
    }
}

struct Frame {
    AlgNum gamma{1};
    int E = 1;
    Series S;
    AlgNum delta{1};
    int M = 0;
};

class Expander {
   public:
    Expander(const PolarOptions& opt, const PointAtInfinity& p, const LimitContext* lim)
        : opt_(opt), point_(p), lim_(lim) {}

    void run(const BiPoly<AlgNum>& F, int mult, PolarBranches& out) {
        expand(F, Frame{}, nullptr, mult, out);
    }

   private:
    const PolarOptions& opt_;
    PointAtInfinity point_;
    const LimitContext* lim_;
    int names_ = 0;

    struct Edge {
        int i0, j0, i1, j1, m, q;
    };

    void emit(PuiseuxBranch b, PolarBranches& out) {
        if (lim_) b.limit = compute_limit(b, *lim_);
        out.branches.push_back(std::move(b));
    }

    PuiseuxBranch base_branch(const Frame& fr, const FieldPtr& L, int mult) const {
        PuiseuxBranch b;
        b.point = point_;
        b.field = L;
        b.ramification = fr.E;
        b.gamma = fr.gamma;
        b.multiplicity = mult;
        b.head = fr.S;
        b.delta = fr.delta;
        b.shift = fr.M;
        return b;
    }

    void expand(BiPoly<AlgNum> F, const Frame& fr, const FieldPtr& L, int mult, PolarBranches& out) {
        for (const auto& [m, c] : F.terms()) (void)unit(c);
        int ky = F.order_in(1);
        if (ky > 0) {
            PuiseuxBranch b = base_branch(fr, L, mult * ky);
            b.u = fr.S;
            b.exact = true;
            b.precision = -1;
            emit(std::move(b), out);
            F = F.unshifted(0, ky);
        }
        int J = -1;
        for (const auto& [m, c] : F.terms())
            if (m.e1 == 0 && (J < 0 || m.e2 < J)) J = m.e2;
        if (J < 0) throw InternalInconsistency("polar equation divisible by the branch parameter");
        if (J == 0) return;
        if (J == 1) {
            PuiseuxBranch b = base_branch(fr, L, mult);
            b.tail = F;
            b.refine(fr.M + 1);
            emit(std::move(b), out);
            return;
        }
        for (const Edge& e : edges(F, J)) {
            int h = (e.j0 - e.j1) / e.q;
            std::vector<AlgNum> phi(static_cast<std::size_t>(h + 1), AlgNum(0));
            for (int s = 0; s <= h; ++s) phi[static_cast<std::size_t>(s)] = F.coeff(e.i1 - e.m * s, e.j1 + e.q * s);
            edge_roots(F, fr, L, mult, e, UniPoly<AlgNum>(std::move(phi)), out);
        }
    }

    static std::vector<Edge> edges(const BiPoly<AlgNum>& F, int J) {
        std::vector<std::pair<int, int>> pts;
        for (const auto& [m, c] : F.terms())
            if (m.e2 < J) pts.emplace_back(m.e1, m.e2);
        std::vector<Edge> out;
        int ci = 0, cj = J;
        while (cj > 0) {
            int bi = -1, bj = -1;
            for (auto [i, j] : pts) {
                if (j >= cj) continue;
                if (bi < 0) {
                    bi = i;
                    bj = j;
                    continue;
                }
                // compare (i - ci)/(cj - j) with (bi - ci)/(cj - bj)
                long lhs = static_cast<long>(i - ci) * (cj - bj), rhs = static_cast<long>(bi - ci) * (cj - j);
                if (lhs < rhs || (lhs == rhs && j < bj)) {
                    bi = i;
                    bj = j;
                }
            }
            if (bi <= ci) throw InternalInconsistency("degenerate Newton polygon");
            int di = bi - ci, dj = cj - bj, g = std::gcd(di, dj);
            out.push_back({ci, cj, bi, bj, di / g, dj / g});
            ci = bi;
            cj = bj;
        }
        return out;
    }

    void edge_roots(const BiPoly<AlgNum>& F, const Frame& fr, const FieldPtr& L, int mult, const Edge& e,
                    const UniPoly<AlgNum>& phi, PolarBranches& out) {
        if (!L) {
            QPoly qphi = phi.map([](const AlgNum& a) { return a.rational(); });
            auto split = uni_squarefree_and_roots(qphi);
            for (const auto& r : split.roots) descend(F, fr, L, mult, e, AlgNum(r.root), out);
            auto layers = squarefree_decomposition(split.residual);
            for (const auto& psi : layers)
                if (psi.degree() > 0)
                    factor_root(F, fr, L, mult, e, psi.map([](const Rational& r) { return AlgNum(r); }), out);
            return;
        }
        for (const auto& psi : squarefree_decomposition(phi))
            if (psi.degree() > 0) factor_root(F, fr, L, mult, e, psi, out);
    }

    /// Roots of the squarefree factor psi over L.
    void factor_root(const BiPoly<AlgNum>& F, const Frame& fr, const FieldPtr& L, int mult, const Edge& e,
                     const UniPoly<AlgNum>& psi, PolarBranches& out) {
        UniPoly<AlgNum> m = psi.monic();
        if (m.degree() == 1) {
            descend(F, fr, L, mult, e, -m[0], out);
            return;
        }
        FieldPtr L2;
        try {
            L2 = make_extension(L, m, "w" + std::to_string(++names_), opt_.budget);
        } catch (const NeedsExtension&) {
            out.unresolved.push_back({m.degree() * (L ? L->absolute_degree : 1), mult});
            return;
        }
        PolarBranches local;
        try {
            descend(F, fr, L2, mult, e, AlgNum::generator(L2), local);
        } catch (const ZeroDivisorSplit& s) {
            if (s.field() != L2) throw;
            UniPoly<AlgNum> g = s.factor().monic();
            factor_root(F, fr, L, mult, e, g, out);
            factor_root(F, fr, L, mult, e, divide_exact(m, g), out);
            return;
        }
        for (auto& b : local.branches) out.branches.push_back(std::move(b));
        for (auto& u : local.unresolved) out.unresolved.push_back(u);
    }

    /// Substitutes X = z^v0 X1^q, Y = X1^m (z^u0 + Y1) for the edge root z
    /// of the characteristic polynomial and continues.
    void descend(const BiPoly<AlgNum>& F, const Frame& fr, const FieldPtr& L, int mult, const Edge& e,
                 const AlgNum& zeta, PolarBranches& out) {
        int q = e.q, m = e.m;
        long u0 = 1, v0 = 0;
        if (q != 1) {
            u0 = 0;
            while ((u0 * q) % m != 1 % m) ++u0;
            v0 = (u0 * q - 1) / m;
        }
        AlgNum zv = apow(zeta, v0), zu = apow(zeta, u0);
        long l = static_cast<long>(q) * e.i1 + static_cast<long>(m) * e.j1;
        int dy = F.degree_in(1);
        std::vector<AlgNum> zup{AlgNum(1)};
        for (int j = 1; j <= dy; ++j) zup.push_back(zup.back() * zu);
        BiPoly<AlgNum> F1;
        for (const auto& [mono, c] : F.terms()) {
            AlgNum base = c * apow(zv, mono.e1);
            int xe = static_cast<int>(static_cast<long>(q) * mono.e1 + static_cast<long>(m) * mono.e2 - l);
            if (xe < 0) throw InternalInconsistency("Newton polygon edge is not a supporting line");
            mpz_class binom = 1;
            for (int k = 0; k <= mono.e2; ++k) {
                AlgNum coef = base * AlgNum(Rational(binom)) * zup[static_cast<std::size_t>(mono.e2 - k)];
                F1 += BiPoly<AlgNum>::term(coef, xe, k);
                binom = binom * (mono.e2 - k) / (k + 1);
            }
        }
        Frame nf;
        nf.gamma = fr.gamma * apow(zv, fr.E);
        nf.E = q * fr.E;
        nf.M = q * fr.M + m;
        nf.S.assign(static_cast<std::size_t>(nf.M + 1), AlgNum(0));
        AlgNum zp(1);
        for (std::size_t i = 0; i < fr.S.size(); ++i) {
            if (!fr.S[i].is_zero()) nf.S[i * static_cast<std::size_t>(q)] += fr.S[i] * zp;
            zp *= zv;
        }
        AlgNum zvM = apow(zv, fr.M);
        nf.S[static_cast<std::size_t>(nf.M)] += fr.delta * zvM * zu;
        nf.delta = fr.delta * zvM;
        expand(std::move(F1), nf, L, mult, out);
    }
};

inline QBiPoly polar_equation_hat(const QBiPoly& f_std) {
    QBiPoly P = f_std.partial(1);
    if (P.is_zero()) throw DegeneratePolar("the polar curve f_y = 0 is the whole plane");
    return germ_hat(P);
}

inline PolarBranches branches_of_hat(QBiPoly Ph, const PointAtInfinity& p, const PolarOptions& opt,
                                     const LimitContext* lim) {
    PolarBranches out;
    if (Ph.is_constant()) return out;
    Ph = Ph.unshifted(0, Ph.order_in(1));
    if (!Ph.constant_term().is_zero()) return out;
    out.intersection_with_line = Ph.restrict_to(1, Rational(0)).order();
    Expander ex(opt, p, lim);
    auto layers = squarefree_decomposition_in(Ph, 0);
    for (std::size_t i = 0; i < layers.size(); ++i) {
        if (layers[i].degree_in(0) <= 0) continue;
        BiPoly<AlgNum> F = layers[i].swapped().map([](const Rational& r) { return AlgNum(r); });
        ex.run(F, static_cast<int>(i) + 1, out);
    }
    if (out.unresolved.empty()) {
        long total = 0;
        for (const auto& b : out.branches)
            total += static_cast<long>(b.ramification) * b.residue_degree() * b.multiplicity;
        if (total != out.intersection_with_line)
            throw InternalInconsistency("polar branches account for " + std::to_string(total) +
                                        " intersections with the line at infinity, expected " +
                                        std::to_string(out.intersection_with_line));
    }
    return out;
}

}  // namespace detail

inline void PuiseuxBranch::refine(int p) {
    if (exact || p <= precision) return;
    int n = std::max(1, p - shift);
    Series Y = detail::solve_regular(tail, n);
    u = head;
    u.resize(static_cast<std::size_t>(shift + n), AlgNum(0));
    for (int i = 0; i < n; ++i)
        if (!Y[static_cast<std::size_t>(i)].is_zero())
            u[static_cast<std::size_t>(shift + i)] += delta * Y[static_cast<std::size_t>(i)];
    precision = shift + n;
}

inline std::string PuiseuxBranch::to_string() const {
    UniPoly<AlgNum> up(u);
    std::string s = "v = ";
    s += gamma == AlgNum(1) ? std::string() : "(" + gamma.to_string() + ")*";
    s += ramification == 1 ? std::string("T") : "T^" + std::to_string(ramification);
    s += ", u = " + up.to_string("T");
    if (!exact) s += " + O(T^" + std::to_string(precision) + ")";
    if (field) s += " over Q(" + field->name + ")";
    return s;
}

/// Branches of P = 0 through p, for P given in the original coordinates.
inline PolarBranches puiseux_branches_at_infinity(const QBiPoly& P, const PointAtInfinity& p,
                                                  const PolarOptions& opt = {}) {
    if (P.is_zero()) throw ZeroPolynomial("polar equation is zero");
    PointAtInfinity at = p.a.is_zero() ? PointAtInfinity{Rational(0), Rational(1), p.multiplicity}
                                       : PointAtInfinity{Rational(1), p.b / p.a, p.multiplicity};
    QBiPoly Pm = move_to_standard(P, at).f;
    return detail::branches_of_hat(germ_hat(Pm), at, opt, nullptr);
}

/// Polar branches at p with the limit of f along each.
struct PolarAnalysis {
    PointAtInfinity point;
    int d = 0;
    PolarBranches polar;
};

inline PolarAnalysis analyze_polar(const QBiPoly& f, const PointAtInfinity& p, const PolarOptions& opt = {}) {
    PolarAnalysis a;
    StandardForm s = detail::standard_for(f, p, a.point);
    a.d = s.f.total_degree();
    QBiPoly g_hat = germ_hat(s.f);
    detail::LimitContext ctx{&g_hat, a.d, opt.trunc > 0 ? opt.trunc : 4 * a.d * a.d};
    a.polar = detail::branches_of_hat(detail::polar_equation_hat(s.f), a.point, opt, &ctx);
    return a;
}

/// Limit of f along a branch returned by puiseux_branches_at_infinity.
inline BranchLimit branch_limit(const QBiPoly& f, PuiseuxBranch branch, const PolarOptions& opt = {}) {
    StandardForm s = move_to_standard(f, branch.point);
    int d = s.f.total_degree();
    QBiPoly g_hat = germ_hat(s.f);
    detail::LimitContext ctx{&g_hat, d, opt.trunc > 0 ? opt.trunc : 4 * d * d};
    return detail::compute_limit(branch, ctx);
}

namespace detail {

inline void require_resolved(const PolarAnalysis& a) {
    if (!a.polar.unresolved.empty())
        throw NeedsExtension("a polar branch at " + a.point.to_string() + " needs an extension of degree " +
                             std::to_string(a.polar.unresolved.front().degree));
}

inline long weight(const PuiseuxBranch& b) {
    return static_cast<long>(b.limit->k) * b.residue_degree() * b.multiplicity;
}

}  // namespace detail

inline long nu_via_polar(const PolarAnalysis& a, const Rational& c) {
    detail::require_resolved(a);
    long nu = 0;
    for (const auto& b : a.polar.branches)
        if (b.limit->kind == BranchLimit::Kind::Value && b.limit->value == c) nu += detail::weight(b);
    return nu;
}

inline long nu_via_polar_infinity(const PolarAnalysis& a) {
    detail::require_resolved(a);
    long nu = 0;
    for (const auto& b : a.polar.branches)
        if (b.limit->kind == BranchLimit::Kind::Infinity) nu += detail::weight(b);
    return nu;
}

/// nu_{p,c} as the number of points of f = t on f_y = 0 tending to p as t -> c.
inline long nu_via_polar(const QBiPoly& f, const PointAtInfinity& p, const Rational& c,
                         const PolarOptions& opt = {}) {
    PointAtInfinity at;
    StandardForm s = detail::standard_for(f, p, at);
    QBiPoly P = s.f.partial(1);
    if (P.is_zero()) throw DegeneratePolar("the polar curve f_y = 0 is the whole plane");
    QBiPoly shared = gcd(s.f - QBiPoly(c), P);
    if (!shared.is_constant() && germ_hat(shared).constant_term().is_zero())
        throw DegeneratePolar("f - " + c.to_string() + " and the polar curve share a component through " +
                              at.to_string());
    return nu_via_polar(analyze_polar(f, p, opt), c);
}

inline long nu_via_polar_infinity(const QBiPoly& f, const PointAtInfinity& p, const PolarOptions& opt = {}) {
    return nu_via_polar_infinity(analyze_polar(f, p, opt));
}

struct CandidateValue {
    BranchLimit::Kind kind = BranchLimit::Kind::Value;
    Rational value;
    QPoly minpoly;
    long nu = 0;  ///< sum of k over the branches, counted over all conjugates

    std::string to_string() const {
        return kind == BranchLimit::Kind::Value      ? value.to_string()
               : kind == BranchLimit::Kind::Infinity ? std::string("inf")
                                                     : "root of " + minpoly.to_string("t");
    }
};

/// Limit values of f along the polar branches at p: rational values
/// ascending, then algebraic classes, then infinity.
inline std::vector<CandidateValue> candidate_values_at_infinity(const PolarAnalysis& a) {
    detail::require_resolved(a);
    std::vector<CandidateValue> out;
    for (const auto& b : a.polar.branches) {
        const BranchLimit& L = *b.limit;
        auto it = std::find_if(out.begin(), out.end(), [&](const CandidateValue& c) {
            return c.kind == L.kind && (L.kind != BranchLimit::Kind::Value || c.value == L.value) &&
                   (L.kind != BranchLimit::Kind::Algebraic || c.minpoly == L.minpoly);
        });
        if (it == out.end()) {
            out.push_back({L.kind, L.value, L.minpoly, 0});
            it = std::prev(out.end());
        }
        it->nu += detail::weight(b);
    }
    auto rank = [](BranchLimit::Kind k) {
        return k == BranchLimit::Kind::Value ? 0 : k == BranchLimit::Kind::Algebraic ? 1 : 2;
    };
    std::stable_sort(out.begin(), out.end(), [&](const CandidateValue& x, const CandidateValue& y) {
        if (rank(x.kind) != rank(y.kind)) return rank(x.kind) < rank(y.kind);
        return x.kind == BranchLimit::Kind::Value && x.value < y.value;
    });
    return out;
}

inline std::vector<CandidateValue> candidate_values_at_infinity(const QBiPoly& f, const PointAtInfinity& p,
                                                                const PolarOptions& opt = {}) {
    return candidate_values_at_infinity(analyze_polar(f, p, opt));
}

}  // namespace atinf

#endif
