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

#ifndef ATINF_REPORT_HPP
#define ATINF_REPORT_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "affine.hpp"
#include "milnor.hpp"
#include "polar.hpp"
#include "resolve.hpp"

namespace atinf {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kSchema = "atinf.report/1";

/// A value c: rational, a class of conjugate algebraic numbers, or infinity.
struct Value {
    enum class Kind { Rational, Algebraic, Infinity };
    Kind kind = Kind::Rational;
    Rational q;
    QPoly minpoly;

    static Value rational(const Rational& r) { return {Kind::Rational, r, {}}; }
    static Value algebraic(const QPoly& m) { return {Kind::Algebraic, {}, m}; }
    static Value infinity() { return {Kind::Infinity, {}, {}}; }
    std::string to_string() const {
        switch (kind) {
            case Kind::Rational: return q.to_string();
            case Kind::Algebraic: return "root of " + minpoly.to_string("t");
            case Kind::Infinity: return "inf";
        }
        return "";
    }
};

struct AnalyzeOptions {
    std::optional<PointAtInfinity> point;  ///< restrict to one point
    std::vector<Rational> values;          ///< extra finite values to classify
    bool resolve = false;                  ///< condition R and dual graphs
    bool gtilde = false;                   ///< g-tilde from the simultaneous resolution
    PolarOptions polar;
    ResolveOptions resolution;
    unsigned threads = 0;                  ///< 0: ATINF_THREADS or the hardware count
};

struct PointValueVerdict {
    enum class Label { Regular, CriticalAtInfinity, Unanalyzable, Unlabeled };
    PointAtInfinity p;
    Value c;
    std::optional<Multiplicity> mu_c;
    std::optional<long> mu_gen;
    std::optional<long> nu_milnor;
    std::optional<long> nu_polar;
    bool nu_agree = true;
    std::optional<long> g_tilde;
    std::optional<RVerdict> condition_r;
    Label label = Label::Unlabeled;
    std::string reason;

    std::optional<long> nu() const { return nu_milnor ? nu_milnor : nu_polar; }
    static std::string label_name(Label l) {
        switch (l) {
            case Label::Regular: return "Regular";
            case Label::CriticalAtInfinity: return "CriticalAtInfinity";
            case Label::Unanalyzable: return "Unanalyzable";
            case Label::Unlabeled: return "";
        }
        return "";
    }
};

struct CrossCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct PointReport {
    PointAtInfinity p;
    std::optional<long> mu_gen;
    std::vector<PointValueVerdict> rows;
    std::optional<std::string> dot;
    std::vector<std::string> notes;
    std::vector<CrossCheck> checks;
};

struct Report {
    std::string input;
    int d = 0;
    std::vector<PointAtInfinity> points;
    std::vector<ResidualFactor> residual_points;
    std::optional<AffineCriticalData> affine;
    std::vector<Value> sigma_fin;
    std::vector<Value> sigma_infinity;
    std::vector<PointReport> per_point;
    std::optional<GlobalInvariants> global;
    std::vector<std::string> notes;
    std::vector<CrossCheck> checks;

    bool partial() const {
        for (const auto& pr : per_point)
            for (const auto& r : pr.rows)
                if (r.label == PointValueVerdict::Label::Unanalyzable) return true;
        return !affine.has_value();
    }
    std::vector<const PointValueVerdict*> rows() const {
        std::vector<const PointValueVerdict*> out;
        for (const auto& pr : per_point)
            for (const auto& r : pr.rows) out.push_back(&r);
        return out;
    }
};

namespace detail {

inline unsigned thread_cap(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ATINF_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

template <class Fn>
void parallel_for(std::size_t n, unsigned cap, Fn&& fn) {
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(n, cap));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) fn(i);
        });
    for (auto& t : pool) t.join();
}

inline void label_row(PointValueVerdict& v) {
    if (v.label == PointValueVerdict::Label::Unanalyzable) return;
    if (v.c.kind == Value::Kind::Infinity) return;
    auto nu = v.nu();
    if (!nu) {
        v.label = PointValueVerdict::Label::Unanalyzable;
        return;
    }
    v.label = *nu == 0 ? PointValueVerdict::Label::Regular : PointValueVerdict::Label::CriticalAtInfinity;
}

inline PointReport analyze_point(const QBiPoly& f, const PointAtInfinity& p, const AnalyzeOptions& opt) {
    PointReport pr;
    pr.p = p;
    GenericMilnorResult gen;
    try {
        gen = milnor_generic(f, p);
        pr.mu_gen = gen.mu_gen;
    } catch (const Error& e) {
        PointValueVerdict v;
        v.p = p;
        v.c = Value::infinity();
        v.label = PointValueVerdict::Label::Unanalyzable;
        v.reason = e.code();
        pr.rows.push_back(v);
        return pr;
    }
    std::optional<PolarAnalysis> polar;
    std::vector<CandidateValue> polar_values;
    try {
        polar = analyze_polar(f, p, opt.polar);
        polar_values = candidate_values_at_infinity(*polar);
    } catch (const Error& e) {
        polar.reset();
        pr.notes.push_back("polar branches unavailable: " + e.code());
    }
    std::optional<Resolution> res, res3;
    if (opt.resolve) {
        res = resolve_indeterminacy(f, p, opt.resolution);
        pr.dot = dual_graph_dot(*res);
        for (const auto& o : res->obstructions) pr.notes.push_back("irrational center on " + o.to_string());
        if (res->truncated) pr.notes.push_back("blowup budget exhausted");
    }
    if (opt.gtilde) res3 = resolve(f, p, true, opt.resolution);

    std::vector<Rational> values = gen.candidates;
    for (const auto& cv : polar_values)
        if (cv.kind == BranchLimit::Kind::Value) values.push_back(cv.value);
    values.insert(values.end(), opt.values.begin(), opt.values.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    for (const auto& c : values) {
        PointValueVerdict v;
        v.p = pr.p;
        v.c = Value::rational(c);
        v.mu_gen = gen.mu_gen;
        try {
            v.mu_c = milnor_at_value(f, p, c);
            v.nu_milnor = vanishing_cycles(f, p, c, gen).nu;
        } catch (const Error& e) {
            v.reason = e.code();
        }
        if (polar) {
            try {
                v.nu_polar = nu_via_polar(*polar, c);
            } catch (const Error& e) {
                if (v.reason.empty()) v.reason = e.code();
            }
        }
        if (v.nu_milnor && v.nu_polar) v.nu_agree = *v.nu_milnor == *v.nu_polar;
        if (!v.nu_milnor && !v.nu_polar) v.label = PointValueVerdict::Label::Unanalyzable;
        if (res) {
            try {
                v.condition_r = condition_R(*res, c);
            } catch (const Error& e) {
                pr.notes.push_back("condition R at " + c.to_string() + ": " + e.code());
            }
        }
        if (res3) {
            try {
                v.g_tilde = g_set(*res3, &c).components;
            } catch (const Error& e) {
                pr.notes.push_back("g-tilde at " + c.to_string() + ": " + e.code());
            }
        }
        label_row(v);
        pr.rows.push_back(v);
    }

    QPoly remaining = gen.irrational_candidates;
    for (const auto& cv : polar_values) {
        if (cv.kind != BranchLimit::Kind::Algebraic) continue;
        PointValueVerdict v;
        v.p = pr.p;
        v.c = Value::algebraic(cv.minpoly);
        v.mu_gen = gen.mu_gen;
        v.nu_polar = cv.nu;
        label_row(v);
        pr.rows.push_back(v);
        if (remaining.degree() > 0) remaining = divide_exact(remaining, gcd(remaining, cv.minpoly));
    }
    if (remaining.degree() > 0) {
        PointValueVerdict v;
        v.p = pr.p;
        v.c = Value::algebraic(remaining);
        v.mu_gen = gen.mu_gen;
        if (polar) {
            v.nu_polar = 0;
        } else {
            v.label = PointValueVerdict::Label::Unanalyzable;
            v.reason = "NeedsExtension";
        }
        label_row(v);
        pr.rows.push_back(v);
    }

    PointValueVerdict inf;
    inf.p = pr.p;
    inf.c = Value::infinity();
    inf.mu_gen = gen.mu_gen;
    try {
        auto vc = vanishing_cycles_infinity(f, p, gen);
        inf.mu_c = vc.mu_c;
        inf.nu_milnor = vc.nu;
        long expected = static_cast<long>(pr.p.multiplicity - 1) * (f.total_degree() - 1);
        pr.checks.push_back({"degree identity at " + pr.p.to_string(), gen.mu_gen + vc.nu == expected,
                             std::to_string(gen.mu_gen) + " + " + std::to_string(vc.nu) + " = " + std::to_string(expected)});
    } catch (const Error& e) {
        inf.reason = e.code();
    }
    if (polar) {
        try {
            inf.nu_polar = nu_via_polar_infinity(*polar);
        } catch (const Error& e) {
            if (inf.reason.empty()) inf.reason = e.code();
        }
    }
    if (inf.nu_milnor && inf.nu_polar) inf.nu_agree = *inf.nu_milnor == *inf.nu_polar;
    if (!inf.nu_milnor && !inf.nu_polar) inf.label = PointValueVerdict::Label::Unanalyzable;
    if (res3) {
        try {
            inf.g_tilde = g_set(*res3, nullptr).components;
        } catch (const Error& e) {
            pr.notes.push_back("g-tilde at inf: " + e.code());
        }
    }
    pr.rows.push_back(inf);

    for (const auto& r : pr.rows) {
        std::string where = pr.p.to_string() + ", " + r.c.to_string();
        if (r.nu_milnor && r.nu_polar)
            pr.checks.push_back({"nu oracles at " + where, r.nu_agree,
                                 std::to_string(*r.nu_milnor) + " vs " + std::to_string(*r.nu_polar)});
        if (r.g_tilde && r.nu())
            pr.checks.push_back({"nu >= g-tilde at " + where, *r.nu() >= *r.g_tilde,
                                 std::to_string(*r.nu()) + " >= " + std::to_string(*r.g_tilde)});
        if (r.condition_r && r.nu() && r.c.kind == Value::Kind::Rational)
            pr.checks.push_back({"condition R matches nu = 0 at " + where, r.condition_r->holds == (*r.nu() == 0),
                                 r.condition_r->to_string()});
    }
    return pr;
}

}  // namespace detail

/// Full classification of f: points at infinity, per-(p, c) verdicts,
/// affine critical values and global invariants.
inline Report analyze(const QBiPoly& f, const AnalyzeOptions& opt = {}) {
    if (f.total_degree() <= 0) throw ConstantPolynomial("constant polynomial");
    Report r;
    r.input = f.to_string();
    r.d = f.total_degree();
    auto pts = points_at_infinity(f);
    r.residual_points = pts.residuals;
    if (opt.point) {
        PointAtInfinity checked;
        detail::standard_for(f, *opt.point, checked);
        r.points.push_back(checked);
    } else {
        r.points = pts.points;
    }
    for (const auto& res : pts.residuals)
        r.notes.push_back("points at infinity with irrational coordinates are not analyzed: roots of " +
                          res.poly.to_string("s"));

    r.per_point.resize(r.points.size());
    detail::parallel_for(r.points.size(), detail::thread_cap(opt.threads),
                         [&](std::size_t i) { r.per_point[i] = detail::analyze_point(f, r.points[i], opt); });

    try {
        r.affine = affine_critical_values(f);
        for (const auto& [c, mu] : r.affine->rational_values) r.sigma_fin.push_back(Value::rational(c));
        for (const auto& cl : r.affine->irrational_classes) r.sigma_fin.push_back(Value::algebraic(cl.factor));
    } catch (const Error& e) {
        r.notes.push_back("affine critical locus: " + e.code());
    }

    std::map<Rational, long> fin_nu;
    std::vector<LambdaTerm> terms;
    std::vector<Value> algebraic_sigma;
    bool incomplete = !pts.residuals.empty() || opt.point.has_value();
    for (const auto& pr : r.per_point)
        for (const auto& row : pr.rows) {
            if (row.label == PointValueVerdict::Label::Unanalyzable) incomplete = true;
            auto nu = row.nu();
            if (!nu || row.c.kind == Value::Kind::Infinity) continue;
            if (*nu > 0) terms.push_back({pr.p.to_string(), row.c.to_string(), *nu});
            if (row.c.kind == Value::Kind::Rational) {
                fin_nu[row.c.q] += *nu;
            } else if (*nu > 0) {
                bool seen = false;
                for (const auto& a : algebraic_sigma) seen = seen || a.minpoly == row.c.minpoly;
                if (!seen) algebraic_sigma.push_back(row.c);
            }
        }
    for (const auto& [c, nu] : fin_nu)
        if (nu > 0) r.sigma_infinity.push_back(Value::rational(c));
    r.sigma_infinity.insert(r.sigma_infinity.end(), algebraic_sigma.begin(), algebraic_sigma.end());

    if (r.affine && r.affine->mu_total.is_finite()) {
        std::vector<std::string> notes;
        if (opt.point) notes.push_back("lambda restricted to " + opt.point->to_string());
        r.global = global_invariants(*r.affine, terms, incomplete, notes);
        r.checks.push_back({"rank H1 = mu + lambda", r.global->rank_h1 == r.global->mu + r.global->lambda,
                            std::to_string(r.global->rank_h1)});
    }
    long polar_lambda = 0;
    bool polar_complete = true;
    for (const auto& pr : r.per_point)
        for (const auto& row : pr.rows) {
            if (row.c.kind == Value::Kind::Infinity) continue;
            if (!row.nu_polar) {
                if (row.nu_milnor && *row.nu_milnor > 0) polar_complete = false;
                continue;
            }
            polar_lambda += *row.nu_polar;
        }
    if (r.global && polar_complete)
        r.checks.push_back({"lambda from both oracles", polar_lambda == r.global->lambda,
                            std::to_string(polar_lambda) + " vs " + std::to_string(r.global->lambda)});
    for (const auto& pr : r.per_point) r.checks.insert(r.checks.end(), pr.checks.begin(), pr.checks.end());
    return r;
}

namespace detail {

inline nlohmann::json rational_json(const Rational& q) {
    return {{"num", q.num().get_str()}, {"den", q.den().get_str()}};
}

inline nlohmann::json value_json(const Value& v) {
    switch (v.kind) {
        case Value::Kind::Rational: return rational_json(v.q);
        case Value::Kind::Algebraic: return {{"minpoly", v.minpoly.to_string("t")}};
        case Value::Kind::Infinity: return "inf";
    }
    return nullptr;
}

inline nlohmann::json multiplicity_json(const Multiplicity& m) {
    if (m.is_infinite()) return "inf";
    return m.value();
}

inline nlohmann::json point_json(const PointAtInfinity& p) {
    return {{"point", p.to_string()}, {"a", rational_json(p.a)}, {"b", rational_json(p.b)}, {"multiplicity", p.multiplicity}};
}

inline nlohmann::json checks_json(const std::vector<CrossCheck>& cs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : cs) out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return out;
}

}  // namespace detail

/// Deterministic JSON with sorted keys.
inline std::string emit_json(const Report& r) {
    using nlohmann::json;
    using namespace detail;
    json j;
    j["schema"] = kSchema;
    j["tool"] = {{"name", "atinf"}, {"version", kVersion}};
    j["input"] = r.input;
    j["degree"] = r.d;
    json pts = json::array();
    for (const auto& p : r.points) pts.push_back(point_json(p));
    j["points_at_infinity"] = pts;
    json res = json::array();
    for (const auto& f : r.residual_points) res.push_back({{"poly", f.poly.to_string("s")}, {"multiplicity", f.multiplicity}});
    j["residual_points"] = res;
    auto strings = [](const std::vector<Value>& vs) {
        json a = json::array();
        for (const auto& v : vs) a.push_back(v.to_string());
        return a;
    };
    j["sigma_fin"] = strings(r.sigma_fin);
    j["sigma_infinity"] = strings(r.sigma_infinity);
    if (r.affine) {
        json a;
        a["eliminant"] = r.affine->eliminant.to_string("t");
        a["mu_total"] = multiplicity_json(r.affine->mu_total);
        json vals = json::array();
        for (const auto& [c, mu] : r.affine->rational_values) vals.push_back({{"value", rational_json(c)}, {"mu", mu}});
        a["rational_values"] = vals;
        json cls = json::array();
        for (const auto& c : r.affine->irrational_classes)
            cls.push_back({{"factor", c.factor.to_string("t")}, {"degree", c.degree}, {"mu", c.mu}});
        a["irrational_classes"] = cls;
        json cps = json::array();
        for (const auto& p : r.affine->rational_points)
            cps.push_back({{"x", rational_json(p.x)}, {"y", rational_json(p.y)}, {"value", rational_json(p.value)}, {"mu", p.mu}});
        a["critical_points"] = cps;
        j["affine"] = a;
    } else {
        j["affine"] = nullptr;
    }
    json rows = json::array();
    json graphs = json::object();
    for (const auto& pr : r.per_point) {
        if (pr.dot) graphs[pr.p.to_string()] = *pr.dot;
        for (const auto& v : pr.rows) {
            json row;
            row["p"] = v.p.to_string();
            row["c"] = value_json(v.c);
            row["mu_c"] = v.mu_c ? multiplicity_json(*v.mu_c) : json(nullptr);
            row["mu_gen"] = v.mu_gen ? json(*v.mu_gen) : json(nullptr);
            row["nu"] = {{"milnor", v.nu_milnor ? json(*v.nu_milnor) : json(nullptr)},
                         {"polar", v.nu_polar ? json(*v.nu_polar) : json(nullptr)},
                         {"agree", v.nu_agree}};
            row["g_tilde"] = v.g_tilde ? json(*v.g_tilde) : json(nullptr);
            row["condition_r"] = v.condition_r ? json(v.condition_r->to_string()) : json(nullptr);
            if (v.label != PointValueVerdict::Label::Unlabeled)
                row["label"] = PointValueVerdict::label_name(v.label);
            if (!v.reason.empty()) row["reason"] = v.reason;
            rows.push_back(row);
        }
    }
    j["verdicts"] = rows;
    j["resolution_graphs"] = graphs;
    if (r.global) {
        j["global"] = {{"mu", r.global->mu},
                       {"lambda", r.global->lambda},
                       {"rank_h1", r.global->rank_h1},
                       {"lower_bound", r.global->lower_bound}};
    } else {
        j["global"] = nullptr;
    }
    std::vector<CrossCheck> all = r.checks;
    j["cross_checks"] = checks_json(all);
    json notes = json::array();
    for (const auto& n : r.notes) notes.push_back(n);
    for (const auto& pr : r.per_point)
        for (const auto& n : pr.notes) notes.push_back(pr.p.to_string() + ": " + n);
    j["notes"] = notes;
    j["partial"] = r.partial();
    return j.dump(2) + "\n";
}

/// Plain-text table of the report.
inline std::string format_text(const Report& r) {
    std::ostringstream os;
    os << "f = " << r.input << "  (degree " << r.d << ")\n";
    os << "points at infinity:";
    for (const auto& p : r.points) os << " " << p.to_string() << "^" << p.multiplicity;
    for (const auto& f : r.residual_points) os << " roots(" << f.poly.to_string("s") << ")";
    os << "\n";
    auto list = [&](const std::vector<Value>& vs) {
        std::string s = "{";
        for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + vs[i].to_string();
        return s + "}";
    };
    os << "Sigma_fin = " << list(r.sigma_fin) << "\n";
    os << "Sigma_inf = " << list(r.sigma_infinity) << "\n";
    for (const auto& pr : r.per_point) {
        os << "\n" << pr.p.to_string();
        if (pr.mu_gen) os << "  mu_gen = " << *pr.mu_gen;
        os << "\n";
        for (const auto& v : pr.rows) {
            os << "  c = " << v.c.to_string();
            if (v.mu_c) os << "  mu_c = " << v.mu_c->to_string();
            auto show = [](const std::optional<long>& x) { return x ? std::to_string(*x) : std::string("-"); };
            os << "  nu = " << show(v.nu_milnor) << " (polar " << show(v.nu_polar) << ")";
            if (v.g_tilde) os << "  g~ = " << *v.g_tilde;
            if (v.condition_r) os << "  R: " << v.condition_r->to_string();
            if (v.label != PointValueVerdict::Label::Unlabeled) os << "  " << PointValueVerdict::label_name(v.label);
            if (!v.reason.empty()) os << " (" << v.reason << ")";
            os << "\n";
        }
        for (const auto& n : pr.notes) os << "  note: " << n << "\n";
    }
    if (r.global) {
        os << "\nmu = " << r.global->mu << ", lambda = " << r.global->lambda << ", rank H1 = " << r.global->rank_h1
           << (r.global->lower_bound ? " (lower bound)" : "") << "\n";
    }
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    long failed = std::count_if(r.checks.begin(), r.checks.end(), [](const CrossCheck& c) { return !c.passed; });
    os << "cross-checks: " << r.checks.size() - static_cast<std::size_t>(failed) << "/" << r.checks.size() << " passed\n";
    return os.str();
}

}  // namespace atinf

#endif
