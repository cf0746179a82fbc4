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

#ifndef ATINF_AFFINE_HPP
#define ATINF_AFFINE_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "milnor.hpp"
#include "polar.hpp"

namespace atinf {

struct CriticalPoint {
    Rational x, y, value;
    long mu = 0;
};

/// Conjugate critical values without rational representatives.
struct IrrationalClass {
    QPoly factor;   ///< squarefree, its roots are the values
    int degree = 0;
    long mu = 0;    ///< total Milnor number over all points with these values
};

struct AffineCriticalData {
    QPoly eliminant;  ///< squarefree, roots are exactly the finite critical values
    std::vector<std::pair<Rational, long>> rational_values;  ///< ascending, with total mu
    std::vector<IrrationalClass> irrational_classes;
    std::vector<CriticalPoint> rational_points;
    Multiplicity mu_total;
    Rational shear;  ///< lambda of the substitution x -> x + lambda y used for elimination
};

namespace detail {

/// F(x0, y) for x0 in a number field.
inline UniPoly<AlgNum> at_x(const QBiPoly& F, const AlgNum& x0) {
    std::vector<AlgNum> c(static_cast<std::size_t>(std::max(0, F.degree_in(1)) + 1));
    for (const auto& [m, a] : F.terms()) c[static_cast<std::size_t>(m.e2)] += AlgNum(a) * apow(x0, m.e1);
    return UniPoly<AlgNum>(std::move(c));
}

inline bool monic_in_y(const QBiPoly& F) {
    if (F.is_zero()) return false;
    return F.degree_in(1) == F.total_degree();
}

/// Critical points over one squarefree factor r of the resultant, all with
/// multiplicity `mult` in it. Returns false when two critical points share
/// the same x coordinate, so that a different shear is needed.
struct ClassOutcome {
    bool separated = true;
    std::vector<std::pair<AlgNum, AlgNum>> points;  ///< (x0, y0) over a field of r
};

inline ClassOutcome solve_over(const QBiPoly& F, const QBiPoly& G, const UniPoly<AlgNum>& r, const FieldPtr& base) {
    ClassOutcome out;
    FieldPtr L;
    AlgNum x0;
    if (r.degree() == 1) {
        x0 = -r[0] / r[1];
    } else {
        L = make_extension(base, r, "x", ExtensionBudget{1, 64});
        x0 = AlgNum::generator(L);
    }
    try {
        UniPoly<AlgNum> g = squarefree_part(gcd(at_x(F, x0), at_x(G, x0)));
        if (g.degree() != 1) {
            out.separated = false;
            return out;
        }
        out.points.emplace_back(x0, -g[0] / g[1]);
        return out;
    } catch (const ZeroDivisorSplit& s) {
        if (!L || s.field() != L) throw;
        UniPoly<AlgNum> g = s.factor();
        for (const auto& part : {g, divide_exact(r, g)}) {
            ClassOutcome sub = solve_over(F, G, part, base);
            if (!sub.separated) return sub;
            out.points.insert(out.points.end(), sub.points.begin(), sub.points.end());
        }
        return out;
    }
}

}  // namespace detail

/// Critical points and values of f in the affine plane.
inline AffineCriticalData affine_critical_values(const QBiPoly& f) {
    if (f.total_degree() <= 0) throw ConstantPolynomial("constant polynomial has no critical values");
    AffineCriticalData out;
    out.eliminant = QPoly(Rational(1));
    QBiPoly fx = f.partial(0), fy = f.partial(1);
    QBiPoly h = gcd(fx, fy);
    if (!h.is_constant()) {
        out.mu_total = Multiplicity::infinite();
        throw NonIsolatedCriticalLocus("f_x and f_y share the factor " + h.to_string());
    }
    if (fx.is_zero() || fy.is_zero() || fx.is_constant() || fy.is_constant()) return out;

    for (long k = 0; k < 64; ++k) {
        Rational lam(k % 2 ? (k + 1) / 2 : -(k / 2));
        QBiPoly fs = f.compose(QBiPoly::var(0) + QBiPoly(lam) * QBiPoly::var(1), QBiPoly::var(1));
        QBiPoly F = fs.partial(0), G = fs.partial(1);
        if (!detail::monic_in_y(F) || !detail::monic_in_y(G)) continue;
        QPoly R = resultant(F, G, 1).restrict_to(1, Rational(0));
        auto layers = squarefree_decomposition(R);
        bool separated = true;
        std::vector<std::tuple<AlgNum, AlgNum, long>> pts;  // x0, y0, mult
        for (std::size_t i = 0; i < layers.size() && separated; ++i) {
            if (layers[i].degree() <= 0) continue;
            auto split = uni_squarefree_and_roots(layers[i]);
            std::vector<UniPoly<AlgNum>> parts;
            for (const auto& rr : split.roots) parts.push_back(UniPoly<AlgNum>({AlgNum(-rr.root), AlgNum(1)}));
            if (split.residual.degree() > 0) parts.push_back(split.residual.map([](const Rational& q) { return AlgNum(q); }));
            for (const auto& part : parts) {
                auto res = detail::solve_over(F, G, part, nullptr);
                if (!res.separated) {
                    separated = false;
                    break;
                }
                for (const auto& [x0, y0] : res.points) pts.emplace_back(x0, y0, static_cast<long>(i) + 1);
            }
        }
        if (!separated) continue;

        out.shear = lam;
        out.mu_total = Multiplicity(std::max(0, R.degree()));
        std::map<Rational, long> rational;
        std::vector<std::pair<QPoly, long>> residual_parts;
        for (const auto& [x0, y0, mult] : pts) {
            AlgNum v;
            for (const auto& [m, c] : fs.terms()) v += AlgNum(c) * detail::apow(x0, m.e1) * detail::apow(y0, m.e2);
            if (x0.is_rational()) {
                Rational a = x0.rational(), b = y0.demoted().rational();
                QBiPoly Ft = F.compose(QBiPoly::var(0) + QBiPoly(a), QBiPoly::var(1) + QBiPoly(b));
                QBiPoly Gt = G.compose(QBiPoly::var(0) + QBiPoly(a), QBiPoly::var(1) + QBiPoly(b));
                Multiplicity mu = intersection_multiplicity(Ft, Gt);
                if (!(mu == mult))
                    throw InternalInconsistency("local Milnor number " + mu.to_string() + " differs from the resultant order " +
                                                std::to_string(mult));
                Rational c = v.demoted().rational();
                out.rational_points.push_back({a + lam * b, b, c, mult});
                rational[c] += mult;
                continue;
            }
            // Milnor number of each conjugate point: order of the resultant
            auto split = uni_squarefree_and_roots(charpoly(v));
            for (const auto& rr : split.roots) rational[rr.root] += rr.multiplicity * mult;
            auto parts = squarefree_decomposition(split.residual);
            for (std::size_t i = 0; i < parts.size(); ++i)
                if (parts[i].degree() > 0) residual_parts.emplace_back(parts[i], static_cast<long>(i + 1) * mult);
        }
        long rational_mu = 0;
        for (const auto& [c, mu] : rational) {
            out.rational_values.emplace_back(c, mu);
            out.eliminant = out.eliminant * QPoly({-c, Rational(1)});
            rational_mu += mu;
        }
        // merge classes that share values
        std::vector<IrrationalClass> classes;
        for (const auto& [p, mu] : residual_parts) {
            bool merged = false;
            for (auto& cl : classes)
                if (cl.factor == p) {
                    cl.mu += mu * p.degree();
                    merged = true;
                }
            if (!merged) classes.push_back({p, p.degree(), mu * p.degree()});
        }
        long class_mu = 0;
        for (const auto& cl : classes) {
            class_mu += cl.mu;
            out.eliminant = out.eliminant * cl.factor;
        }
        if (rational_mu + class_mu != out.mu_total.value())
            throw InternalInconsistency("critical point Milnor numbers do not add up to the resultant degree");
        out.irrational_classes = std::move(classes);
        out.eliminant = squarefree_part(out.eliminant);
        std::sort(out.rational_points.begin(), out.rational_points.end(), [](const auto& a, const auto& b) {
            return std::tie(a.x, a.y) < std::tie(b.x, b.y);
        });
        return out;
    }
    throw InternalInconsistency("no shear separates the critical points");
}

/// Sum of Milnor numbers of the affine critical points.
inline Multiplicity mu_total(const QBiPoly& f) {
    try {
        return affine_critical_values(f).mu_total;
    } catch (const NonIsolatedCriticalLocus&) {
        return Multiplicity::infinite();
    }
}

/// One contribution nu_{p,c} to lambda.
struct LambdaTerm {
    std::string point;
    std::string value;  ///< rational value, or "root of ..." for a conjugate class
    long nu = 0;
};

struct GlobalInvariants {
    long mu = 0;
    long lambda = 0;
    long rank_h1 = 0;
    bool lower_bound = false;   ///< parts of the analysis were out of reach
    std::vector<std::string> notes;
    std::vector<LambdaTerm> terms;
};

/// mu, lambda = sum nu_{p,c} over finite c, and rank H_1 = mu + lambda.
inline GlobalInvariants global_invariants(const AffineCriticalData& a, const std::vector<LambdaTerm>& terms,
                                          bool incomplete, std::vector<std::string> notes = {}) {
    GlobalInvariants g;
    if (a.mu_total.is_infinite()) throw NonIsolatedCriticalLocus("mu is infinite");
    g.mu = a.mu_total.value();
    for (const auto& t : terms) g.lambda += t.nu;
    g.rank_h1 = g.mu + g.lambda;
    g.lower_bound = incomplete;
    g.notes = std::move(notes);
    g.terms = terms;
    return g;
}

/// Computes lambda from the Milnor engine at every rational point at
/// infinity; values without rational representatives are taken from the
/// polar branches.
inline GlobalInvariants global_invariants(const QBiPoly& f) {
    AffineCriticalData a = affine_critical_values(f);
    auto pts = points_at_infinity(f);
    std::vector<LambdaTerm> terms;
    std::vector<std::string> notes;
    bool incomplete = false;
    for (const auto& r : pts.residuals) {
        incomplete = true;
        notes.push_back("points at infinity with irrational coordinates: roots of " + r.poly.to_string("s"));
    }
    for (const auto& p : pts.points) {
        auto gen = milnor_generic(f, p);
        for (const auto& c : gen.candidates) {
            long nu = vanishing_cycles(f, p, c, gen).nu;
            if (nu > 0) terms.push_back({p.to_string(), c.to_string(), nu});
        }
        if (gen.irrational_candidates.degree() > 0) {
            try {
                for (const auto& cv : candidate_values_at_infinity(f, p))
                    if (cv.kind == BranchLimit::Kind::Algebraic && cv.nu > 0)
                        terms.push_back({p.to_string(), cv.to_string(), cv.nu});
            } catch (const Error& e) {
                incomplete = true;
                notes.push_back("values at " + p.to_string() + " without rational representatives: " + e.code());
            }
        }
    }
    return global_invariants(a, terms, incomplete, std::move(notes));
}

/// lambda recomputed from the polar branches alone.
inline long lambda_via_polar(const QBiPoly& f) {
    long lambda = 0;
    for (const auto& p : points_at_infinity(f).points)
        for (const auto& cv : candidate_values_at_infinity(f, p))
            if (cv.kind != BranchLimit::Kind::Infinity) lambda += cv.nu;
    return lambda;
}

}  // namespace atinf

#endif
