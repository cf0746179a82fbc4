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

#include "atinf/chart.hpp"
#include "atinf/parse.hpp"

using namespace atinf;

namespace {

PointAtInfinity P(long a, long b) { return {Rational(a), Rational(b), 0}; }

}  // namespace

TEST(PointsAtInfinity, MonomialTopForm) {
    auto pts = points_at_infinity(parse_poly("y*(x*y-1)"));
    ASSERT_EQ(pts.points.size(), 2u);
    EXPECT_EQ(pts.points[0].to_string(), "[1,0,0]");
    EXPECT_EQ(pts.points[0].multiplicity, 2);
    EXPECT_EQ(pts.points[1].to_string(), "[0,1,0]");
    EXPECT_EQ(pts.points[1].multiplicity, 1);
    EXPECT_TRUE(pts.residuals.empty());
}

TEST(PointsAtInfinity, ParabolaAndResidual) {
    auto pts = points_at_infinity(parse_poly("x - y^2"));
    ASSERT_EQ(pts.points.size(), 1u);
    EXPECT_EQ(pts.points[0], P(1, 0));
    EXPECT_EQ(pts.points[0].multiplicity, 2);

    auto circ = points_at_infinity(parse_poly("x^2 + y^2"));
    EXPECT_TRUE(circ.points.empty());
    ASSERT_EQ(circ.residuals.size(), 1u);
    EXPECT_EQ(circ.residuals[0].degree(), 2);
    EXPECT_THROW(points_at_infinity(parse_poly("7")), ConstantPolynomial);
}

TEST(PointsAtInfinity, MultiplicitiesSumToDegree) {
    for (const char* s : {"(x-2*y)^3*(x^2+y^2)^2*y + x", "x^2*y - 3*x*y^2 + 2*y^3 + x*y + 1",
                          "(3*x+5*y)^2*(x^2-2*y^2) - y", "y^4 + x^2*y + x"}) {
        auto f = parse_poly(s);
        auto pts = points_at_infinity(f);
        int total = 0;
        for (const auto& p : pts.points) {
            total += p.multiplicity;
            EXPECT_EQ(multiplicity_at_infinity(f, p.a, p.b), p.multiplicity);
        }
        for (const auto& r : pts.residuals) total += r.degree() * r.multiplicity;
        EXPECT_EQ(total, f.total_degree()) << s;
    }
    auto pts = points_at_infinity(parse_poly("(x-2*y)^3*(x^2+y^2)^2*y + x"));
    ASSERT_EQ(pts.points.size(), 2u);
    EXPECT_EQ(pts.points[0].to_string(), "[1,0,0]");
    EXPECT_EQ(pts.points[1].to_string(), "[1,1/2,0]");
    EXPECT_EQ(pts.points[1].multiplicity, 3);
    ASSERT_EQ(pts.residuals.size(), 1u);
    EXPECT_EQ(pts.residuals[0].multiplicity, 2);
}

TEST(MoveToStandard, Examples) {
    auto f = parse_poly("x*y^2 - y");
    auto s = move_to_standard(f, P(0, 1));
    EXPECT_EQ(s.f, parse_poly("x^2*y - x"));
    EXPECT_FALSE(s.change.is_identity());
    auto id = move_to_standard(f, P(1, 0));
    EXPECT_TRUE(id.change.is_identity());
    EXPECT_EQ(id.f, f);
    auto g = parse_poly("x - y^2");
    EXPECT_EQ(move_to_standard(g, P(1, 0)).f, g);

    auto h = parse_poly("(x-2*y)^2 + y");
    PointAtInfinity p{Rational(1), Rational(1) / Rational(2), 2};
    auto hs = move_to_standard(h, p);
    EXPECT_EQ(hs.f.homogeneous_part(2), parse_poly("4*y^2"));
    EXPECT_EQ(hs.f.total_degree(), 2);
}

TEST(LocalGerm, ReferenceGerms) {
    auto g1 = local_germ_symbolic(parse_poly("y*(x*y-1)"), P(1, 0));
    EXPECT_EQ(germ_to_string(g1), "u^2 - u*v^2 - t*v^3");
    auto g2 = local_germ_symbolic(parse_poly("x*(y^2-1)"), P(1, 0));
    EXPECT_EQ(germ_to_string(g2), "u^2 - v^2 - t*v^3");
    auto g3 = local_germ_symbolic(parse_poly("x - y^2"), P(1, 0));
    EXPECT_EQ(germ_to_string(g3), "v - u^2 - t*v^2");
}

TEST(LocalGerm, ValueIsSpecializationOfSymbolic) {
    for (const char* s : {"y*(x*y-1)", "x*(y^2-1)", "(x*y^2-y-1)^2 + (y^2-1)^2", "y^4 + x^2*y + x"}) {
        auto f = parse_poly(s);
        for (const auto& p : points_at_infinity(f).points) {
            auto sym = local_germ_symbolic(f, p);
            for (long c : {-3L, 0L, 1L, 7L}) {
                auto val = local_germ_value(f, p, Rational(c));
                auto spec = sym.g.map([&](const RatFunc& r) { return r.eval(Rational(c)); });
                EXPECT_EQ(val.g, spec) << s << " at " << p.to_string();
                EXPECT_EQ(val.g.order_in(1), 0);
                EXPECT_LE(val.g.order(), p.multiplicity);
            }
        }
    }
}

TEST(LocalGerm, NotAPoint) {
    EXPECT_THROW(local_germ_value(parse_poly("x - y^2"), P(0, 1), Rational(0)), NotAPointOfF);
    EXPECT_THROW(local_germ_symbolic(parse_poly("x*y"), P(1, 1)), NotAPointOfF);
}

TEST(LocalGerm, InfinityLimitPair) {
    auto g = local_germ_infinity(parse_poly("y*(x*y-1)"), P(1, 0));
    EXPECT_EQ(germ_to_string(g), "-v^3");
    auto [gu, gv] = g.partials();
    EXPECT_EQ(gu.to_string({"u", "v"}, true), "2*u - v^2");
    EXPECT_EQ(gv.to_string({"u", "v"}, true), "-3*v^2");
}
