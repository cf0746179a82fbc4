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

#include "atinf/algebra.hpp"
#include "oracles.hpp"

using namespace atinf;
using Q = Rational;
using QPoly = UniPoly<Rational>;
using QBi = BiPoly<Rational>;

namespace {

QPoly tpoly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return QPoly(std::move(v));
}

QBi X() { return QBi::var(0); }
QBi Y() { return QBi::var(1); }
QBi C(long c) { return QBi(Rational(c)); }

}  // namespace

TEST(Rational, ExactArithmetic) {
    EXPECT_EQ(Q(1) / Q(2) + Q(1) / Q(3), Q(5) / Q(6));
    EXPECT_EQ((Q(5) / Q(6)).to_string(), "5/6");
    EXPECT_EQ(Q(mpz_class(4), mpz_class(-6)).to_string(), "-2/3");
    EXPECT_EQ(Q(0).den(), 1);
    EXPECT_THROW(Q(1) / Q(0), DivisionByZero);
    EXPECT_EQ(Q::parse("-12/8"), Q(-3) / Q(2));
    EXPECT_EQ((Q(2) / Q(3)).pow(-2), Q(9) / Q(4));
}

TEST(RatFunc, FieldOperations) {
    RatFunc t = RatFunc::t();
    EXPECT_EQ(RatFunc(1) / t * t, RatFunc(1));
    RatFunc a = (t * t - RatFunc(1)) / (t - RatFunc(1));
    EXPECT_TRUE(a.is_polynomial());
    EXPECT_EQ(a, t + RatFunc(1));
    EXPECT_EQ((RatFunc(1) / (RatFunc(2) * t)).den(), tpoly({0, 1}));
    EXPECT_EQ((t / (t + RatFunc(1))).eval(Q(1)), Q(1) / Q(2));
    EXPECT_THROW((RatFunc(1) / t).eval(Q(0)), DivisionByZero);
    EXPECT_THROW(RatFunc(1) / RatFunc(0), DivisionByZero);
}

TEST(AlgNum, ReductionByModulus) {
    FieldPtr k = make_extension(tpoly({-2, 0, 1}), "s");
    AlgNum s = AlgNum::generator(k);
    EXPECT_EQ(s * s, AlgNum(2));
    EXPECT_EQ((s * s).demoted(), AlgNum(2));
    AlgNum inv = (AlgNum(1) + s).inverse();
    EXPECT_EQ(inv * (AlgNum(1) + s), AlgNum(1));
    EXPECT_EQ(inv, s - AlgNum(1));
    EXPECT_FALSE(decide_zero(s));
    EXPECT_THROW(AlgNum(0).inverse(), DivisionByZero);
}

TEST(AlgNum, UnrelatedFieldsMismatch) {
    FieldPtr k1 = make_extension(tpoly({-2, 0, 1}), "s");
    FieldPtr k2 = make_extension(tpoly({-3, 0, 1}), "r");
    EXPECT_THROW(AlgNum::generator(k1) + AlgNum::generator(k2), FieldMismatch);
}

TEST(AlgNum, TowerOfDepthTwo) {
    FieldPtr k1 = make_extension(tpoly({-2, 0, 1}), "s");
    UniPoly<AlgNum> m{AlgNum(-3), AlgNum(0), AlgNum(1)};
    FieldPtr k2 = make_extension(k1, m, "r");
    AlgNum s = AlgNum::generator(k1), r = AlgNum::generator(k2);
    EXPECT_EQ((s * r) * (s * r), AlgNum(6));
    EXPECT_EQ(charpoly(s + r), tpoly({1, 0, -10, 0, 1}));
    EXPECT_EQ(rational_minpoly(s * r), tpoly({-6, 0, 1}));
    AlgNum x = s + r;
    EXPECT_EQ(x * x.inverse(), AlgNum(1));
    EXPECT_EQ(AlgNum::unflatten(k2, x.flatten()), x);
}

TEST(AlgNum, BudgetEnforced) {
    FieldPtr k1 = make_extension(tpoly({-2, 0, 1}), "s");
    UniPoly<AlgNum> m{AlgNum(-3), AlgNum(0), AlgNum(1)};
    FieldPtr k2 = make_extension(k1, m, "r");
    EXPECT_THROW(make_extension(k2, UniPoly<AlgNum>{AlgNum(-5), AlgNum(0), AlgNum(1)}, "w"), NeedsExtension);
    QPoly big = QPoly::monomial(Q(1), 17) - QPoly(Q(2));
    EXPECT_THROW(make_extension(big, "w"), NeedsExtension);
    EXPECT_NO_THROW(make_extension(big, "w", ExtensionBudget{2, 32}));
}

TEST(AlgNum, ReducibleModulusSplitsOnInversion) {
    FieldPtr k = make_extension(tpoly({-1, 0, 1}), "z");
    AlgNum z = AlgNum::generator(k);
    try {
        (void)decide_zero(z - AlgNum(1));
        FAIL() << "expected a split";
    } catch (const ZeroDivisorSplit& e) {
        EXPECT_EQ(e.field(), k);
        EXPECT_EQ(e.factor().degree(), 1);
        EXPECT_EQ(e.factor()(AlgNum(1)), AlgNum(0));
    }
}

TEST(UniPoly, GcdExamples) {
    EXPECT_EQ(gcd(tpoly({-1, 0, 1}), tpoly({-1, 1})), tpoly({-1, 1}));
    EXPECT_EQ(gcd(tpoly({1, 0, 1}), tpoly({2, 1})), tpoly({1}));
    QPoly a = tpoly({-1, 1}).pow(2) * tpoly({-2, 1});
    QPoly b = tpoly({-1, 1}) * tpoly({-3, 1});
    EXPECT_EQ(gcd(a, b), tpoly({-1, 1}));
    EXPECT_EQ(gcd(tpoly({2, 4}), QPoly()), (QPoly{Q(1) / Q(2), Q(1)}));
}

TEST(UniPoly, GcdDividesBothRandomized) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> deg(0, 5);
    for (int k = 0; k < 100; ++k) {
        QPoly common = oracle::random_unipoly(rng, deg(rng) % 3);
        QPoly a = common * oracle::random_unipoly(rng, deg(rng));
        QPoly b = common * oracle::random_unipoly(rng, deg(rng));
        if (a.is_zero() || b.is_zero()) continue;
        QPoly g = gcd(a, b);
        EXPECT_TRUE((a % g).is_zero());
        EXPECT_TRUE((b % g).is_zero());
        if (!common.is_zero()) {
            EXPECT_TRUE((g % common.monic()).is_zero());
        }
        auto [g2, s, t] = ext_gcd(a, b);
        EXPECT_EQ(g2, g);
        EXPECT_EQ(s * a + t * b, g);
    }
}

TEST(UniPoly, SquarefreeAndRoots) {
    auto r = uni_squarefree_and_roots(tpoly({-1, 1}).pow(2) * tpoly({-2, 1}));
    ASSERT_EQ(r.roots.size(), 2u);
    EXPECT_EQ(r.roots[0], (RationalRoot{Q(1), 2}));
    EXPECT_EQ(r.roots[1], (RationalRoot{Q(2), 1}));
    EXPECT_EQ(r.residual, tpoly({1}));

    auto r2 = uni_squarefree_and_roots(tpoly({1, 0, 1}));
    EXPECT_TRUE(r2.roots.empty());
    EXPECT_EQ(r2.residual, tpoly({1, 0, 1}));

    auto r3 = uni_squarefree_and_roots(tpoly({0, -4, 0, 4}));
    ASSERT_EQ(r3.roots.size(), 3u);
    EXPECT_EQ(r3.roots[0], (RationalRoot{Q(-1), 1}));
    EXPECT_EQ(r3.roots[1], (RationalRoot{Q(0), 1}));
    EXPECT_EQ(r3.roots[2], (RationalRoot{Q(1), 1}));
    EXPECT_EQ(r3.residual, tpoly({1}));

    EXPECT_THROW(uni_squarefree_and_roots(QPoly()), ZeroPolynomial);
}

TEST(UniPoly, RootsWithLargeCoefficientsAndResidual) {
    // (6t - 5)(7t + 3)^2 (t^2 - 2) and a big semiprime denominator
    QPoly p = tpoly({-5, 6}) * tpoly({3, 7}).pow(2) * tpoly({-2, 0, 1});
    auto r = uni_squarefree_and_roots(p);
    ASSERT_EQ(r.roots.size(), 2u);
    EXPECT_EQ(r.roots[0], (RationalRoot{Q(-3) / Q(7), 2}));
    EXPECT_EQ(r.roots[1], (RationalRoot{Q(5) / Q(6), 1}));
    EXPECT_EQ(r.residual, tpoly({-2, 0, 1}));
    mpz_class big("1000000007");
    big *= mpz_class("998244353");
    QPoly q{Q(-1), Q(big)};
    EXPECT_EQ(rational_roots(q * tpoly({1, 0, 1})), std::vector<Q>{Q(mpz_class(1), big)});
}

TEST(UniPoly, RootReconstructionRandomized) {
    std::mt19937 rng(5);
    for (int k = 0; k < 40; ++k) {
        QPoly p(Q(1));
        for (int j = 0; j < 3; ++j) p *= QPoly{-oracle::random_rational(rng), Q(1)};
        p *= tpoly({3, 0, 1});
        auto r = uni_squarefree_and_roots(p);
        QPoly rebuilt = r.residual;
        for (const auto& rr : r.roots) rebuilt *= QPoly{-rr.root, Q(1)}.pow(rr.multiplicity);
        EXPECT_EQ(rebuilt, p.monic());
        EXPECT_TRUE(rational_roots(r.residual).empty());
    }
}

TEST(Resultant, Examples) {
    QBi f = Y() * Y() - X();
    EXPECT_EQ(resultant(f, Y(), 1), -X());
    EXPECT_EQ(resultant(Y() - C(1), Y() - C(2), 1), C(-1));
    QBi g = X() * Y() - C(1);
    EXPECT_TRUE(resultant(g, g, 1).is_zero());
}

TEST(Resultant, MatchesSylvesterAtSpecializations) {
    std::mt19937 rng(7);
    for (int k = 0; k < 50; ++k) {
        QBi f = oracle::random_bipoly(rng, 4, 5), g = oracle::random_bipoly(rng, 3, 4);
        if (f.degree_in(1) <= 0 || g.degree_in(1) <= 0) continue;
        QBi r = resultant(f, g, 1);
        EXPECT_LE(r.degree_in(1), 0);
        for (int x0 = -2; x0 <= 2; ++x0) {
            Q xv(x0);
            QPoly fa = f.restrict_to(0, xv), ga = g.restrict_to(0, xv);
            if (fa.degree() != f.degree_in(1) || ga.degree() != g.degree_in(1)) continue;
            EXPECT_EQ(r(xv, Q(0)), oracle::sylvester_resultant(fa, ga));
        }
    }
}

TEST(Resultant, ZeroExactlyForCommonFactor) {
    std::mt19937 rng(3);
    int common_cases = 0;
    for (int k = 0; k < 50; ++k) {
        QBi h = (k % 2) ? oracle::random_bipoly(rng, 2, 3) : C(1);
        QBi f = h * oracle::random_bipoly(rng, 2, 3), g = h * oracle::random_bipoly(rng, 2, 3);
        if (f.degree_in(1) <= 0 && g.degree_in(1) <= 0) continue;
        if (f.is_zero() || g.is_zero()) continue;
        bool shared = gcd(f, g).degree_in(1) > 0;
        common_cases += shared;
        EXPECT_EQ(resultant(f, g, 1).is_zero(), shared);
    }
    EXPECT_GT(common_cases, 5);
}

TEST(BiPoly, Operations) {
    QBi f = X() * Y() * Y() - Y();
    EXPECT_EQ(f.partial(1), C(2) * X() * Y() - C(1));
    EXPECT_EQ(f.homogeneous_part(3), X() * Y() * Y());
    QBi g = (X() * Y() * Y() - Y() - C(1)).pow(2) + (Y() * Y() - C(1)).pow(2);
    EXPECT_EQ(g.total_degree(), 6);
    EXPECT_EQ(g.homogeneous_part(6), X() * X() * Y().pow(4));
    EXPECT_EQ(f.to_string(), "x*y^2 - y");
    EXPECT_EQ(QBi().total_degree(), -1);
    EXPECT_EQ(f.order(), 1);
}

TEST(BiPoly, GcdAndExactDivision) {
    QBi a = X() * Y() - C(1), b = X() + Y() * Y(), c = X() - C(2) * Y();
    QBi g = gcd(a * b, a * c);
    EXPECT_EQ(g, a.normalized());
    EXPECT_EQ(divide_exact(a * b, b), a);
    EXPECT_THROW(divide_exact(a * b + C(1), b), InexactDivision);
    EXPECT_EQ(gcd(Y() * X(), Y()), Y());
    EXPECT_EQ(gcd(a, b), C(1));
}

TEST(BiPoly, SquarefreeDecomposition) {
    QBi a = X() * Y() - C(1), b = X() + Y() * Y();
    auto parts = squarefree_decomposition_in(a * b.pow(2) * (Y() + C(3)), 0);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0], a.normalized());
    EXPECT_EQ(parts[1], b.normalized());
}

TEST(BiPoly, SubstitutionRespectsComposition) {
    std::mt19937 rng(9);
    for (int k = 0; k < 30; ++k) {
        QBi f = oracle::random_bipoly(rng, 4, 5);
        QBi e = oracle::random_bipoly(rng, 2, 3);
        Q a = oracle::random_rational(rng), b = oracle::random_rational(rng);
        EXPECT_EQ(f.substitute(1, e)(a, b), f(a, e(a, b)));
        EXPECT_EQ(f.substitute(0, e)(a, b), f(e(a, b), b));
    }
}

TEST(FieldElements, ZeroTestIsRepresentationIndependent) {
    std::mt19937 rng(1);
    FieldPtr k = make_extension(tpoly({-2, 0, 1}), "s");
    AlgNum s = AlgNum::generator(k);
    RatFunc t = RatFunc::t();
    for (int i = 0; i < 50; ++i) {
        Q a = oracle::random_rational(rng), b = oracle::random_rational(rng);
        Q qa = a * b - b;
        EXPECT_TRUE(is_zero(qa - qa));
        RatFunc ra = (RatFunc(a) * t + RatFunc(b)) / (t * t + RatFunc(1));
        RatFunc rb = ra * (t - RatFunc(b)) / (t - RatFunc(b));
        EXPECT_TRUE(is_zero(ra - rb));
        AlgNum x = AlgNum(a) + AlgNum(b) * s;
        AlgNum y = x * s * s / AlgNum(2);
        EXPECT_TRUE(is_zero(x - y));
        EXPECT_TRUE(is_zero(x - x.demoted()));
    }
}
