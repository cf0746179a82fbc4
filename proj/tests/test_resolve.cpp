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

#include <algorithm>
#include <numeric>
#include <random>

#include "atinf/milnor.hpp"
#include "atinf/parse.hpp"
#include "atinf/resolve.hpp"
#include "oracles.hpp"

using namespace atinf;

namespace {

PointAtInfinity P(long a, long b) { return {Rational(a), Rational(b), 0}; }
Rational R(long n, long d = 1) { return Rational(n) / Rational(d); }

std::vector<std::string> annotations(const Resolution& r) {
    std::vector<std::string> out;
    for (std::size_t j = 1; j < r.curves.size(); ++j) out.push_back(r.curves[j].annotations[0].to_string());
    std::sort(out.begin(), out.end());
    return out;
}

long arrows(const Resolution& r, const std::string& label) {
    return std::count_if(r.arrows.begin(), r.arrows.end(), [&](const Arrow& a) { return a.label == label; });
}

const char* kExamples[] = {"y*(x*y-1)",         "x*(y^2-1)",   "(x*y^2-y-1)^2 + (y^2-1)^2",
                           "x - y^2",           "y^3 + x*y + x", "y^4 + x^2*y + x",
                           "y - (x*y-1)^2",     "y^5 + x^2*y^3 - y", "y*(x^2*y-1)",
                           "y*(x^3*y-1)",       "x^2*y + x*y^2 + x^5*y^3 + x^3*y^5"};

}  // namespace

TEST(Resolve, DualGraphStructures) {
    auto a = resolve_indeterminacy(parse_poly("y*(x*y-1)"), P(1, 0));
    ASSERT_TRUE(a.complete());
    EXPECT_EQ(annotations(a), (std::vector<std::string>{"0^1", "dicr:1", "inf^1"}));
    std::set<std::pair<int, int>> chain{{0, 1}, {1, 3}, {2, 3}};
    EXPECT_EQ(a.edges, chain);
    EXPECT_EQ(arrows(a, "0"), 2);
    EXPECT_EQ(arrows(a, "t"), 1);

    auto b = resolve_indeterminacy(parse_poly("x*(y^2-1)"), P(1, 0));
    EXPECT_EQ(annotations(b), (std::vector<std::string>{"dicr:1", "dicr:1", "inf^1"}));
    EXPECT_EQ(arrows(b, "0"), 2);
    EXPECT_EQ(arrows(b, "t"), 2);

    auto c = resolve_indeterminacy(parse_poly("y - (x*y-1)^2"), P(1, 0));
    EXPECT_EQ(annotations(c), (std::vector<std::string>{"dicr:2", "inf^2"}));
    EXPECT_EQ(arrows(c, "0"), 1);
    EXPECT_EQ(arrows(c, "t"), 2);
}

TEST(Resolve, DotOutput) {
    auto r = resolve_indeterminacy(parse_poly("y*(x*y-1)"), P(1, 0));
    const std::string expected =
        "graph resolution {\n"
        "  L [label=\"L_inf\", shape=box];\n"
        "  E1 [label=\"inf^1\"];\n"
        "  E2 [label=\"0^1\"];\n"
        "  E3 [label=\"dicr:1\"];\n"
        "  L -- E1;\n"
        "  E1 -- E3;\n"
        "  E2 -- E3;\n"
        "  S1 [shape=point];\n"
        "  E2 -- S1 [dir=forward, label=\"0\"];\n"
        "  S2 [shape=point];\n"
        "  E2 -- S2 [dir=forward, label=\"0\"];\n"
        "  S3 [shape=point];\n"
        "  E3 -- S3 [dir=forward, label=\"t\"];\n"
        "}\n";
    EXPECT_EQ(dual_graph_dot(r), expected);
    EXPECT_EQ(dual_graph_dot(resolve_indeterminacy(parse_poly("y*(x*y-1)"), P(1, 0))), expected);
    std::string empty = dual_graph_dot(Resolution{});
    EXPECT_EQ(empty.find("E1"), std::string::npos);
}

TEST(Resolve, ConditionR) {
    EXPECT_FALSE(condition_R(parse_poly("y*(x*y-1)"), P(1, 0), R(0)).holds);
    auto k = condition_R(parse_poly("y - (x*y-1)^2"), P(1, 0), R(0));
    EXPECT_FALSE(k.holds);
    EXPECT_EQ(k.reason, RVerdict::Reason::NonTransverseContact);
    EXPECT_TRUE(condition_R(parse_poly("x*(y^2-1)"), P(1, 0), R(7)).holds);
    for (long c : {-1L, 0L, 1L, 5L}) EXPECT_TRUE(condition_R(parse_poly("x*(y^2-1)"), P(1, 0), R(c)).holds);
}

TEST(Resolve, GTilde) {
    EXPECT_EQ(g_tilde(parse_poly("y*(x*y-1)"), P(1, 0), R(0)), 1);
    EXPECT_EQ(g_tilde(parse_poly("y^5 + x^2*y^3 - y"), P(1, 0), R(0)), 2);
    EXPECT_EQ(g_tilde(parse_poly("y*(x^2*y-1)"), P(1, 0), R(0)), 1);
    EXPECT_EQ(g_tilde(parse_poly("y*(x*y-1)"), P(1, 0), R(3)), 0);
    // the line x = 0 escapes with the gradient bounded away from zero
    EXPECT_EQ(g_tilde_infinity(parse_poly("x*(y^2-1)"), P(1, 0)), 0);
}

TEST(Resolve, IrrationalCenter) {
    auto f = parse_poly("(x*y^2-y-1)^2 + (y^2-1)^2");
    auto r = resolve_indeterminacy(f, P(0, 1));
    EXPECT_FALSE(r.complete());
    ASSERT_EQ(r.obstructions.size(), 1u);
    EXPECT_EQ(r.obstructions[0].centers, QPoly({R(1), R(0), R(1)}));
    EXPECT_THROW(condition_R(r, R(0)), IncompleteResolution);
    EXPECT_THROW(g_tilde(f, P(0, 1), R(0)), IrrationalCenter);
}

TEST(Resolve, ChartInvariants) {
    for (const char* s : kExamples) {
        auto f = parse_poly(s);
        for (const auto& p : points_at_infinity(f).points) {
            for (bool partials : {false, true}) {
                auto r = resolve(f, p, partials);
                const Chart& root = r.charts[0];
                for (const auto& ch : r.charts) {
                    for (std::size_t m = 0; m < ch.maps.size(); ++m) {
                        const auto& cm = ch.maps[m];
                        const auto& rm = root.maps[m];
                        if (cm.num.is_zero()) continue;
                        EXPECT_TRUE(gcd(cm.num, cm.den).is_constant()) << s;
                        // the chart map is the root map composed with the chart coordinates
                        EXPECT_EQ(rm.num.compose(ch.U, ch.V) * cm.den, rm.den.compose(ch.U, ch.V) * cm.num) << s;
                    }
                }
                if (!r.complete()) continue;
                for (std::size_t j = 1; j < r.curves.size(); ++j) {
                    const Chart& c1 = r.charts[static_cast<std::size_t>(r.curves[j].chart1)];
                    const Chart& c2 = r.charts[static_cast<std::size_t>(r.curves[j].chart2)];
                    for (const auto& m : c1.maps) {
                        if (m.num.is_zero()) continue;
                        QPoly g = gcd(m.num.restrict_to(0, R(0)), m.den.restrict_to(0, R(0)));
                        QPoly left = detail::remove_roots(g, detail::blown_on_line(c1));
                        EXPECT_LE(left.degree(), 0) << s << " E" << j;
                    }
                    for (const auto& m : c2.maps) {
                        if (m.num.is_zero() || c2.is_blown(R(0), R(0))) continue;
                        EXPECT_FALSE(detail::indeterminate_at(m, R(0), R(0))) << s;
                    }
                }
                // the dual graph including the line at infinity is connected
                std::vector<int> comp(r.curves.size());
                std::iota(comp.begin(), comp.end(), 0);
                for (int it = 0; it < static_cast<int>(r.curves.size()); ++it)
                    for (const auto& [a, b] : r.edges) {
                        int m = std::min(comp[static_cast<std::size_t>(a)], comp[static_cast<std::size_t>(b)]);
                        comp[static_cast<std::size_t>(a)] = comp[static_cast<std::size_t>(b)] = m;
                    }
                for (int c : comp) EXPECT_EQ(c, 0) << s;
            }
        }
    }
}

TEST(Resolve, TransitionsAgreeOnSamplePoints) {
    std::mt19937 rng(17);
    auto f = parse_poly("y^5 + x^2*y^3 - y");
    auto r = resolve_indeterminacy(f, P(1, 0));
    const Chart& root = r.charts[0];
    for (const auto& ch : r.charts) {
        if (ch.parent < 0) continue;
        const Chart& par = r.charts[static_cast<std::size_t>(ch.parent)];
        for (int k = 0; k < 5; ++k) {
            Rational a = oracle::random_rational(rng, 9, 4), b = oracle::random_rational(rng, 9, 4);
            Rational pa = ch.kind == 1 ? ch.center_a + a : ch.center_a + a * b;
            Rational pb = ch.kind == 1 ? ch.center_b + a * b : ch.center_b + b;
            EXPECT_EQ(ch.U(a, b), par.U(pa, pb));
            EXPECT_EQ(ch.V(a, b), par.V(pa, pb));
            Rational den = ch.maps[0].den(a, b), rden = root.maps[0].den(ch.U(a, b), ch.V(a, b));
            if (den.is_zero() || rden.is_zero()) continue;
            EXPECT_EQ(ch.maps[0].num(a, b) / den, root.maps[0].num(ch.U(a, b), ch.V(a, b)) / rden);
        }
    }
}

TEST(Resolve, EquivalenceWithVanishingCycles) {
    std::mt19937 rng(23);
    for (const char* s : kExamples) {
        auto f = parse_poly(s);
        for (const auto& p : points_at_infinity(f).points) {
            auto r = resolve_indeterminacy(f, p);
            if (!r.complete()) continue;
            auto gen = milnor_generic(f, p);
            std::vector<Rational> values = gen.candidates;
            for (int k = 0; k < 2; ++k) values.push_back(oracle::random_rational(rng, 20, 5));
            for (const auto& c : values) {
                long nu = vanishing_cycles(f, p, c, gen).nu;
                EXPECT_EQ(condition_R(r, c).holds, nu == 0) << s << " " << p.to_string() << " c=" << c.to_string();
            }
        }
    }
}

TEST(Resolve, NuBoundsGTilde) {
    for (const char* s : kExamples) {
        auto f = parse_poly(s);
        for (const auto& p : points_at_infinity(f).points) {
            auto gen = milnor_generic(f, p);
            Resolution r = resolve(f, p, true);
            if (!r.complete()) continue;
            for (const auto& c : gen.candidates) {
                long g = g_set(r, &c).components;
                EXPECT_GE(vanishing_cycles(f, p, c, gen).nu, g) << s << " c=" << c.to_string();
            }
            EXPECT_GE(vanishing_cycles_infinity(f, p, gen).nu, g_set(r, nullptr).components) << s;
        }
    }
}
