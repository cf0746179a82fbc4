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

#include "atinf/affine.hpp"
#include "atinf/parse.hpp"
#include "oracles.hpp"

using namespace atinf;

namespace {

Rational R(long n, long d = 1) { return Rational(n) / Rational(d); }

using Values = std::vector<std::pair<Rational, long>>;

QBiPoly change(const QBiPoly& f, long a, long b, long c, long d, const Rational& s, const Rational& t) {
    QBiPoly x = QBiPoly::var(0), y = QBiPoly::var(1);
    return f.compose(QBiPoly(Rational(a)) * x + QBiPoly(Rational(b)) * y + QBiPoly(s),
                     QBiPoly(Rational(c)) * x + QBiPoly(Rational(d)) * y + QBiPoly(t));
}

const char* kExamples[] = {"y*(x*y-1)",     "x^2 + y^2",         "(x^2-1)^2 + y^2", "(x^2-2)^2 + y^2",
                           "x^3 + y^2 - 2*x", "x^3 + y^3",         "x^2*y + y^3 - y", "y^5 + x^2*y^3 - y",
                           "x*(y^2-1)",     "x^4 + y^4 - x^2*y"};

}  // namespace

TEST(Affine, Examples) {
    auto none = affine_critical_values(parse_poly("y*(x*y-1)"));
    EXPECT_EQ(none.mu_total, 0);
    EXPECT_TRUE(none.rational_values.empty());
    EXPECT_EQ(none.eliminant.degree(), 0);

    auto conic = affine_critical_values(parse_poly("x^2 + y^2"));
    EXPECT_EQ(conic.mu_total, 1);
    EXPECT_EQ(conic.rational_values, (Values{{R(0), 1}}));

    // (+-1, 0) lie over 0 and the origin over 1
    auto well = affine_critical_values(parse_poly("(x^2-1)^2 + y^2"));
    EXPECT_EQ(well.mu_total, 3);
    EXPECT_EQ(well.rational_values, (Values{{R(0), 2}, {R(1), 1}}));
    EXPECT_EQ(well.rational_points.size(), 3u);

    auto cusp = affine_critical_values(parse_poly("x^3 + y^2"));
    EXPECT_EQ(cusp.mu_total, 2);
    EXPECT_EQ(affine_critical_values(parse_poly("x^3 + y^3")).mu_total, 4);
}

TEST(Affine, IrrationalPoints) {
    // (+-sqrt 2, 0) have the rational value 0
    auto a = affine_critical_values(parse_poly("(x^2-2)^2 + y^2"));
    EXPECT_EQ(a.mu_total, 3);
    EXPECT_EQ(a.rational_values, (Values{{R(0), 2}, {R(4), 1}}));
    EXPECT_EQ(a.rational_points.size(), 1u);
    EXPECT_TRUE(a.irrational_classes.empty());

    // x = +-sqrt(2/3) with values -+(4/3) sqrt(2/3)
    auto b = affine_critical_values(parse_poly("x^3 + y^2 - 2*x"));
    EXPECT_EQ(b.mu_total, 2);
    EXPECT_TRUE(b.rational_values.empty());
    ASSERT_EQ(b.irrational_classes.size(), 1u);
    EXPECT_EQ(b.irrational_classes[0].degree, 2);
    EXPECT_EQ(b.irrational_classes[0].mu, 2);
    EXPECT_EQ(b.irrational_classes[0].factor, QPoly({R(-32, 27), R(0), R(1)}));
    EXPECT_EQ(b.eliminant, b.irrational_classes[0].factor);
}

TEST(Affine, NonIsolated) {
    EXPECT_THROW(affine_critical_values(parse_poly("(x^2 + y^2 - 1)^2")), NonIsolatedCriticalLocus);
    EXPECT_TRUE(mu_total(parse_poly("(x*y - 1)^3")).is_infinite());
    EXPECT_THROW(affine_critical_values(parse_poly("7")), ConstantPolynomial);
}

TEST(Affine, LocalNumbersAgreeWithColengthOracle) {
    for (const char* s : kExamples) {
        auto f = parse_poly(s);
        auto a = affine_critical_values(f);
        for (const auto& p : a.rational_points) {
            QBiPoly g = f.compose(QBiPoly::var(0) + QBiPoly(p.x), QBiPoly::var(1) + QBiPoly(p.y));
            EXPECT_TRUE(g.partial(0).constant_term().is_zero() && g.partial(1).constant_term().is_zero()) << s;
            EXPECT_EQ(g.constant_term(), p.value);
            EXPECT_EQ(oracle::local_intersection(g.partial(0), g.partial(1), 20), p.mu) << s;
        }
    }
}

TEST(Affine, CoordinateChangeInvariance) {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> small(-3, 3);
    for (const char* s : kExamples) {
        auto f = parse_poly(s);
        auto base = affine_critical_values(f);
        for (int k = 0; k < 3; ++k) {
            long a, b, c, d;
            do {
                a = small(rng), b = small(rng), c = small(rng), d = small(rng);
            } while (a * d - b * c != 1 && a * d - b * c != -1);
            auto g = change(f, a, b, c, d, R(small(rng)), R(small(rng)));
            auto moved = affine_critical_values(g);
            EXPECT_EQ(moved.mu_total, base.mu_total) << s;
            EXPECT_EQ(moved.eliminant, base.eliminant) << s;
            EXPECT_EQ(moved.rational_values, base.rational_values) << s;
        }
    }
}

TEST(Affine, RandomAgreesWithPointSum) {
    std::mt19937 rng(41);
    int checked = 0;
    for (int k = 0; k < 60; ++k) {
        QBiPoly f = oracle::random_bipoly(rng, 4, 5, 3);
        if (f.total_degree() < 2) continue;
        AffineCriticalData a;
        try {
            a = affine_critical_values(f);
        } catch (const NonIsolatedCriticalLocus&) {
            continue;
        }
        long sum = 0;
        for (const auto& [c, mu] : a.rational_values) sum += mu;
        for (const auto& cl : a.irrational_classes) sum += cl.mu;
        EXPECT_EQ(sum, a.mu_total.value()) << f.to_string();
        for (const auto& [c, mu] : a.rational_values) EXPECT_TRUE(a.eliminant(c).is_zero());
        ++checked;
    }
    EXPECT_GT(checked, 30);
}

TEST(GlobalInvariants, Examples) {
    auto hyp = global_invariants(parse_poly("y*(x*y-1)"));
    EXPECT_EQ(hyp.mu, 0);
    EXPECT_EQ(hyp.lambda, 1);
    EXPECT_EQ(hyp.rank_h1, 1);
    EXPECT_FALSE(hyp.lower_bound);

    auto conic = global_invariants(parse_poly("x^2 + y^2"));
    EXPECT_EQ(conic.mu, 1);
    EXPECT_EQ(conic.lambda, 0);
    EXPECT_EQ(conic.rank_h1, 1);

    auto two = global_invariants(parse_poly("y*(x^2*y-1)"));
    EXPECT_EQ(two.mu, 0);
    EXPECT_EQ(two.lambda, 2);
    EXPECT_EQ(two.rank_h1, 2);
}

TEST(GlobalInvariants, GenericFiberOfHyperbolaIsPuncturedLine) {
    // x y^2 - y = t is the graph x = (y + t) / y^2 over y != 0, a copy of C*
    auto f = parse_poly("x*y^2 - y");
    std::mt19937 rng(5);
    for (int k = 0; k < 5; ++k) {
        Rational t = oracle::random_rational(rng, 30, 7), y = oracle::random_rational(rng, 30, 7);
        if (y.is_zero() || t.is_zero()) continue;
        EXPECT_EQ(f((y + t) / (y * y), y), t);
    }
    EXPECT_EQ(f.restrict_to(1, R(0)), QPoly());
    const long rank_h1_of_punctured_line = 1;
    EXPECT_EQ(global_invariants(f).rank_h1, rank_h1_of_punctured_line);
}

TEST(GlobalInvariants, LambdaFromBothOracles) {
    for (const char* s : {"y*(x*y-1)", "y*(x^2*y-1)", "y^5 + x^2*y^3 - y", "(x*y^2-y-1)^2 + (y^2-1)^2", "x*(y^2-1)",
                          "y - (x*y-1)^2"}) {
        auto f = parse_poly(s);
        EXPECT_EQ(lambda_via_polar(f), global_invariants(f).lambda) << s;
    }
}
