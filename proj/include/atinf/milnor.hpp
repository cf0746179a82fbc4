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

#ifndef ATINF_MILNOR_HPP
#define ATINF_MILNOR_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "chart.hpp"

namespace atinf {

/// Nonnegative integer or infinity.
class Multiplicity {
   public:
    Multiplicity() = default;
    explicit Multiplicity(long v) : value_(v) {}
    static Multiplicity infinite() {
        Multiplicity m;
        m.infinite_ = true;
        return m;
    }
    bool is_infinite() const noexcept { return infinite_; }
    bool is_finite() const noexcept { return !infinite_; }
    /// Finite value; throws when infinite.
    long value() const {
        if (infinite_) throw std::logic_error("infinite multiplicity has no finite value");
        return value_;
    }
    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }
    friend bool operator==(const Multiplicity& a, const Multiplicity& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator==(const Multiplicity& a, long b) { return a.is_finite() && a.value_ == b; }
    friend Multiplicity operator+(const Multiplicity& a, const Multiplicity& b) {
        if (a.infinite_ || b.infinite_) return infinite();
        return Multiplicity(a.value_ + b.value_);
    }

   private:
    long value_ = 0;
    bool infinite_ = false;
};

/// Observer that ignores the branch decisions.
struct NoDecisions {
    template <class K>
    void decision(const K&) {}
    template <class K>
    void input(const BiPoly<K>&) {}
};

/// Collects, for computations over Q(t), the values of t at which the
/// computation could branch differently: zeros of the numerators of every
/// element whose nonvanishing was used, and poles of the inputs.
class CandidateTracker {
   public:
    void decision(const RatFunc& r) {
        if (r.num().degree() > 0) polys_.push_back(r.num());
    }
    void input(const BiPoly<RatFunc>& p) {
        for (const auto& [m, c] : p.terms())
            if (c.den().degree() > 0) polys_.push_back(c.den());
    }
    template <class K>
    void decision(const K&) {}
    template <class K>
    void input(const BiPoly<K>&) {}

    /// Distinct rational special values, ascending.
    std::vector<Rational> rational_candidates() const {
        std::vector<Rational> out;
        for (const auto& p : distinct())
            for (const auto& r : rational_roots(p)) out.push_back(r);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    /// Squarefree product of the factors without rational roots.
    QPoly irrational_candidates() const {
        QPoly acc(Rational(1));
        for (const auto& p : distinct()) {
            QPoly res = uni_squarefree_and_roots(p).residual;
            if (res.degree() <= 0) continue;
            QPoly g = gcd(acc, res);
            acc = acc * divide_exact(squarefree_part(res), gcd(g, squarefree_part(res)));
        }
        return squarefree_part(acc);
    }

   private:
    std::vector<QPoly> polys_;

    std::vector<QPoly> distinct() const {
        std::vector<QPoly> out;
        for (const auto& p : polys_) {
            QPoly m = p.monic();
            if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
        }
        return out;
    }
};

namespace detail {

template <class K, class Obs>
Multiplicity fulton(BiPoly<K> F, BiPoly<K> G, Obs& obs) {
    long acc = 0;
    while (true) {
        K f0 = F.constant_term(), g0 = G.constant_term();
        if (!is_zero(f0)) {
            obs.decision(f0);
            return Multiplicity(acc);
        }
        if (!is_zero(g0)) {
            obs.decision(g0);
            return Multiplicity(acc);
        }
        UniPoly<K> fr = F.restrict_to(1, K(0)), gr = G.restrict_to(1, K(0));
        if (fr.degree() > gr.degree()) {
            std::swap(F, G);
            std::swap(fr, gr);
        }
        if (fr.is_zero()) {
            if (gr.is_zero()) return Multiplicity::infinite();
            int k = gr.order();
            obs.decision(gr[k]);
            acc += k;
            F = F.unshifted(0, 1);
            continue;
        }
        int r = fr.degree(), s = gr.degree();
        obs.decision(fr.lc());
        obs.decision(gr.lc());
        K q = gr.lc() / fr.lc();
        G -= BiPoly<K>::term(q, s - r, 0) * F;
    }
}

}  // namespace detail

/// Intersection multiplicity at the origin of the curves F = 0 and G = 0.
///
/// Shared components are divided out first; the result is infinite exactly
/// when a shared component passes through the origin. Every field element
/// whose nonvanishing steers the computation is reported to `obs`.
template <class K, class Obs = NoDecisions>
Multiplicity intersection_multiplicity(const BiPoly<K>& F, const BiPoly<K>& G, Obs&& obs = {}) {
    if (F.is_zero() && G.is_zero()) throw BothZero("intersection multiplicity of two zero polynomials");
    obs.input(F);
    obs.input(G);
    if (F.is_zero() || G.is_zero()) {
        const BiPoly<K>& h = F.is_zero() ? G : F;
        if (!is_zero(h.constant_term())) {
            obs.decision(h.constant_term());
            return Multiplicity(0);
        }
        return Multiplicity::infinite();
    }
    BiPoly<K> h = gcd(F, G);
    if (h.is_constant()) return detail::fulton(F, G, obs);
    if (is_zero(h.constant_term())) return Multiplicity::infinite();
    for (const auto& [m, c] : h.terms()) obs.decision(c);
    BiPoly<K> f1 = divide_exact(F, h), g1 = divide_exact(G, h);
    obs.input(f1);
    obs.input(g1);
    return detail::fulton(std::move(f1), std::move(g1), obs);
}

/// Milnor number of a germ: I(g_u, g_v) at the origin.
template <class K>
Multiplicity milnor_number(const BiPoly<K>& g) {
    if (g.is_zero()) throw ZeroPolynomial("Milnor number of the zero germ");
    BiPoly<K> gu = g.partial(0), gv = g.partial(1);
    if (gu.is_zero() && gv.is_zero()) return Multiplicity::infinite();
    return intersection_multiplicity(gu, gv);
}

/// Milnor number of a germ; for t = infinity, the intersection number of
/// the limit pair of partials.
template <class K>
Multiplicity milnor_number(const Germ<K>& g) {
    if (g.t.kind != TSpec::Kind::Infinity) return milnor_number(g.g);
    auto [a, b] = g.partials();
    return intersection_multiplicity(a, b);
}

struct GenericMilnorResult {
    long mu_gen = 0;
    std::vector<Rational> candidates;  ///< rational t where the computation may specialize differently
    QPoly irrational_candidates;       ///< squarefree, roots are the remaining special t
    PointAtInfinity point;
    int d = 0;
};

/// Milnor number of g_{p,t} over Q(t), with the special values of t
/// harvested from the computation.
inline GenericMilnorResult milnor_generic(const QBiPoly& f, const PointAtInfinity& p) {
    Germ<RatFunc> g = local_germ_symbolic(f, p);
    CandidateTracker tracker;
    auto [gu, gv] = g.partials();
    Multiplicity mu = intersection_multiplicity(gu, gv, tracker);
    if (mu.is_infinite())
        throw NonIsolatedForAllT("the germ at " + g.point.to_string() + " is non-isolated for every t");
    GenericMilnorResult r;
    r.mu_gen = mu.value();
    r.candidates = tracker.rational_candidates();
    r.irrational_candidates = tracker.irrational_candidates();
    r.point = g.point;
    r.d = g.d;
    return r;
}

/// mu_{p,c}.
inline Multiplicity milnor_at_value(const QBiPoly& f, const PointAtInfinity& p, const Rational& c) {
    return milnor_number(local_germ_value(f, p, c));
}

struct VanishingCycles {
    long nu = 0;
    Multiplicity mu_c;  ///< finite-c rows only
    long mu_gen = 0;
};

inline VanishingCycles vanishing_cycles(const QBiPoly& f, const PointAtInfinity& p, const Rational& c,
                                        const GenericMilnorResult& gen) {
    VanishingCycles v;
    v.mu_gen = gen.mu_gen;
    v.mu_c = milnor_at_value(f, p, c);
    if (v.mu_c.is_infinite())
        throw NonIsolatedAtC("the germ at " + p.to_string() + " is non-isolated for t = " + c.to_string());
    v.nu = v.mu_c.value() - gen.mu_gen;
    if (v.nu < 0) throw InternalInconsistency("Milnor number below its generic value at t = " + c.to_string());
    return v;
}

inline VanishingCycles vanishing_cycles(const QBiPoly& f, const PointAtInfinity& p, const Rational& c) {
    return vanishing_cycles(f, p, c, milnor_generic(f, p));
}

/// nu_{p,inf} = (d_p - 1)(d - 1) - mu_gen, with the left-hand intersection
/// number recomputed at t = infinity.
inline VanishingCycles vanishing_cycles_infinity(const QBiPoly& f, const PointAtInfinity& p,
                                                 const GenericMilnorResult& gen) {
    Germ<Rational> g = local_germ_infinity(f, p);
    long expected = static_cast<long>(g.point.multiplicity - 1) * (g.d - 1);
    Multiplicity at_inf = milnor_number(g);
    if (!(at_inf == expected))
        throw InternalInconsistency("intersection at t = infinity is " + at_inf.to_string() + ", expected " +
                                    std::to_string(expected));
    VanishingCycles v;
    v.mu_gen = gen.mu_gen;
    v.mu_c = at_inf;
    v.nu = expected - gen.mu_gen;
    if (v.nu < 0) throw InternalInconsistency("negative vanishing cycles at infinity");
    return v;
}

inline VanishingCycles vanishing_cycles_infinity(const QBiPoly& f, const PointAtInfinity& p) {
    return vanishing_cycles_infinity(f, p, milnor_generic(f, p));
}

}  // namespace atinf

#endif
