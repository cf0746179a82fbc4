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

#include <gtest/gtest.h>

#include <random>

#include "atinf/parse.hpp"
#include "atinf/report.hpp"
#include "oracles.hpp"

using namespace atinf;
using nlohmann::json;

namespace {

Rational R(long n, long d = 1) { return Rational(n) / Rational(d); }

const PointValueVerdict* row(const Report& r, const std::string& p, const std::string& c) {
    for (const auto* v : r.rows())
        if (v->p.to_string() == p && v->c.to_string() == c) return v;
    return nullptr;
}

std::vector<std::string> strings(const std::vector<Value>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(v.to_string());
    return out;
}

const char* kExamples[] = {"y*(x*y-1)", "x*(y^2-1)", "(x*y^2-y-1)^2 + (y^2-1)^2", "x - y^2", "y - (x*y-1)^2",
                           "y^5 + x^2*y^3 - y", "y*(x^2*y-1)", "x^2*y + x*y^2 + x^5*y^3 + x^3*y^5"};

}  // namespace

TEST(Report, Hyperbola) {
    AnalyzeOptions o;
    o.resolve = o.gtilde = true;
    o.values = {R(1), R(-1), R(1, 2)};
    Report r = analyze(parse_poly("y*(x*y-1)"), o);
    EXPECT_TRUE(r.sigma_fin.empty());
    EXPECT_EQ(strings(r.sigma_infinity), std::vector<std::string>{"0"});
    const auto* z = row(r, "[1,0,0]", "0");
    ASSERT_NE(z, nullptr);
    EXPECT_EQ(z->label, PointValueVerdict::Label::CriticalAtInfinity);
    EXPECT_EQ(*z->nu_milnor, 1);
    EXPECT_EQ(*z->g_tilde, 1);
    EXPECT_FALSE(z->condition_r->holds);
    for (const char* c : {"1", "-1", "1/2"}) {
        ASSERT_NE(row(r, "[1,0,0]", c), nullptr);
        EXPECT_EQ(row(r, "[1,0,0]", c)->label, PointValueVerdict::Label::Regular);
        EXPECT_EQ(row(r, "[0,1,0]", c)->label, PointValueVerdict::Label::Regular);
    }
    for (const char* p : {"[1,0,0]", "[0,1,0]"}) {
        const auto* inf = row(r, p, "inf");
        ASSERT_NE(inf, nullptr);
        EXPECT_EQ(*inf->nu_milnor, 0);
        EXPECT_EQ(inf->label, PointValueVerdict::Label::Unlabeled);
    }
    ASSERT_TRUE(r.global);
    EXPECT_EQ(r.global->mu, 0);
    EXPECT_EQ(r.global->lambda, 1);
    EXPECT_EQ(r.global->rank_h1, 1);
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    EXPECT_FALSE(r.partial());
}

TEST(Report, InfinityRowsCarryNoLabel) {
    Report r = analyze(parse_poly("x*(y^2-1)"));
    EXPECT_TRUE(r.sigma_infinity.empty());
    const auto* inf = row(r, "[1,0,0]", "inf");
    ASSERT_NE(inf, nullptr);
    EXPECT_EQ(*inf->nu_milnor, 1);
    EXPECT_EQ(inf->label, PointValueVerdict::Label::Unlabeled);
    json j = json::parse(emit_json(r));
    for (const auto& v : j["verdicts"])
        if (v["c"] == "inf") {
            EXPECT_FALSE(v.contains("label"));
        }
}

TEST(Report, QuarticExample) {
    Report r = analyze(parse_poly("(x*y^2-y-1)^2 + (y^2-1)^2"));
    auto s = strings(r.sigma_infinity);
    EXPECT_NE(std::find(s.begin(), s.end(), "1"), s.end());
    EXPECT_NE(std::find(s.begin(), s.end(), "2"), s.end());
    EXPECT_EQ(*row(r, "[1,0,0]", "1")->nu_milnor, 2);
    EXPECT_EQ(*row(r, "[1,0,0]", "2")->nu_milnor, 1);
    EXPECT_EQ(*row(r, "[1,0,0]", "inf")->nu_milnor, 0);
}

TEST(Report, JsonShape) {
    Report r = analyze(parse_poly("y*(x*y-1)"));
    std::string text = emit_json(r);
    EXPECT_NE(text.find("\"sigma_infinity\": [\n    \"0\"\n  ]"), std::string::npos);
    json j = json::parse(text);
    EXPECT_EQ(j["schema"], kSchema);
    EXPECT_EQ(j.dump(2) + "\n", text);
    const auto& first = j["verdicts"][0];
    EXPECT_EQ(first["c"]["num"], "0");
    EXPECT_EQ(first["c"]["den"], "1");
    EXPECT_EQ(j["points_at_infinity"][0]["point"], "[1,0,0]");
    // keys come out sorted
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) {
        keys.push_back(it.key());
    }
    EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
}

TEST(Report, Deterministic) {
    for (const char* s : {"y*(x*y-1)", "y^5 + x^2*y^3 - y", "x*(y^2-2)^2 + y"}) {
        AnalyzeOptions one, many;
        one.threads = 1;
        many.threads = 4;
        one.resolve = many.resolve = true;
        auto f = parse_poly(s);
        std::string a = emit_json(analyze(f, one));
        EXPECT_EQ(a, emit_json(analyze(f, many))) << s;
        EXPECT_EQ(a, emit_json(analyze(f, one))) << s;
    }
}

TEST(Report, VerdictCoherence) {
    for (const char* s : kExamples) {
        AnalyzeOptions o;
        o.resolve = true;
        Report r = analyze(parse_poly(s), o);
        for (const auto* v : r.rows()) {
            if (v->label == PointValueVerdict::Label::Unanalyzable) continue;
            auto nu = v->nu();
            ASSERT_TRUE(nu.has_value()) << s;
            if (v->c.kind != Value::Kind::Infinity) {
                EXPECT_EQ(v->label == PointValueVerdict::Label::Regular, *nu == 0) << s;
            }
            EXPECT_TRUE(v->nu_agree) << s << " " << v->p.to_string() << " " << v->c.to_string();
            if (v->condition_r && v->c.kind == Value::Kind::Rational) {
                EXPECT_EQ(v->condition_r->holds, *nu == 0) << s;
            }
        }
        for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << s << " " << c.name;
    }
}

TEST(Report, CandidateCompleteness) {
    std::mt19937 rng(13);
    for (const char* s : kExamples) {
        auto f = parse_poly(s);
        Report r = analyze(f);
        for (const auto& pr : r.per_point) {
            auto gen = milnor_generic(f, pr.p);
            int sampled = 0;
            while (sampled < 5) {
                Rational c = oracle::random_rational(rng, 40, 9);
                if (row(r, pr.p.to_string(), c.to_string())) continue;
                EXPECT_EQ(vanishing_cycles(f, pr.p, c, gen).nu, 0) << s << " " << c.to_string();
                ++sampled;
            }
        }
    }
}

TEST(Report, OptionsAndPartialResults) {
    AnalyzeOptions o;
    o.point = PointAtInfinity{R(1), R(0), 0};
    o.values = {R(5)};
    Report r = analyze(parse_poly("y*(x*y-1)"), o);
    ASSERT_EQ(r.per_point.size(), 1u);
    EXPECT_NE(row(r, "[1,0,0]", "5"), nullptr);
    AnalyzeOptions off;
    off.point = PointAtInfinity{R(1), R(1), 0};
    EXPECT_THROW(analyze(parse_poly("y*(x*y-1)"), off), NotAPointOfF);

    // values +-sqrt 2 need an extension
    auto f = parse_poly("x*(y^2-2)^2 + y");
    Report full = analyze(f);
    EXPECT_FALSE(full.partial());
    const auto* sq = row(full, "[1,0,0]", "root of t^2 - 2");
    ASSERT_NE(sq, nullptr);
    EXPECT_EQ(*sq->nu_polar, 2);
    EXPECT_EQ(sq->label, PointValueVerdict::Label::CriticalAtInfinity);
    EXPECT_EQ(strings(full.sigma_infinity), std::vector<std::string>{"root of t^2 - 2"});

    AnalyzeOptions tight;
    tight.polar.budget.max_depth = 0;
    Report p = analyze(f, tight);
    EXPECT_TRUE(p.partial());
    EXPECT_TRUE(json::parse(emit_json(p))["partial"].get<bool>());
    EXPECT_TRUE(p.global->lower_bound);

    EXPECT_THROW(analyze(parse_poly("3")), ConstantPolynomial);
}
