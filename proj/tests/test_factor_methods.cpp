#include <gtest/gtest.h>

#include "quadbox/factor_methods.hpp"

using namespace quadbox;

namespace {

Factorization fac(Int p1, Int p2, Int q1, Int q2) { return {{p1, p2}, {q1, q2}}; }

std::vector<std::string> states(const MethodTrace& t) {
    std::vector<std::string> out;
    for (const auto& s : t.steps) out.push_back(s.state);
    return out;
}

}  // namespace

TEST(FactorViaTheorem, Examples) {
    const auto r = factor_via_theorem({3, 10, 8});
    ASSERT_TRUE(r);
    EXPECT_EQ(r->factorization, fac(1, 2, 3, 4));
    EXPECT_EQ(expand(r->factorization), QuadraticPoly(3, 10, 8));
    EXPECT_EQ(r->trace.method, Method::theorem);
    EXPECT_EQ(r->trace.steps.back().state, "(x+2)(3x+4)");

    EXPECT_EQ(factor_via_theorem({1, 2, 1})->factorization, fac(1, 1, 1, 1));
    EXPECT_FALSE(factor_via_theorem({1, 1, 1}));
}

TEST(FactorViaTheorem, ZeroConstantFollowsThePZeroBranch) {
    const auto r = factor_via_theorem({2, 6, 0});
    ASSERT_TRUE(r);
    // p1 = a = 2, q1 = 1, q2 = 0, p2 = q = 6: (2x + 6)(x)
    EXPECT_EQ(r->trace.steps.back().state, "(2x+6)(x)");
    EXPECT_EQ(r->factorization, fac(1, 0, 2, 6));
    EXPECT_EQ(expand(r->factorization), QuadraticPoly(2, 6, 0));

    // With b < 0 the ordered witness is (-6, 0), so the general branch runs.
    const auto neg = factor_via_theorem({2, -6, 0});
    ASSERT_TRUE(neg);
    EXPECT_EQ(neg->trace.steps.back().state, "(2x)(x-3)");
    EXPECT_EQ(expand(neg->factorization), QuadraticPoly(2, -6, 0));

    const auto neg_lead = factor_via_theorem({-3, 6, 0});
    ASSERT_TRUE(neg_lead);
    EXPECT_EQ(expand(neg_lead->factorization), QuadraticPoly(-3, 6, 0));
}

TEST(FactorViaTheorem, ContentStaysInOneFactor) {
    // (2, 4, 2): p = q = 2, p1 = 2, q1 = 1, q2 = 1, p2 = 2.
    EXPECT_EQ(factor_via_theorem({2, 4, 2})->factorization, fac(1, 1, 2, 2));
}

TEST(RootsViaTheorem, Examples) {
    EXPECT_EQ(roots_via_theorem({3, 10, 8}), RootPair(Rat(-2), Rat(-4, 3)));
    EXPECT_EQ(roots_via_theorem({1, 2, 1}), RootPair(Rat(-1), Rat(-1)));
    EXPECT_EQ(roots_via_theorem({1, 0, -4}), RootPair(Rat(-2), Rat(2)));
    EXPECT_FALSE(roots_via_theorem({1, 1, 1}));
    const auto r = roots_via_theorem({3, 10, 8});
    EXPECT_EQ(evaluate(QuadraticPoly(3, 10, 8), r->r1()), Rat(0));
    EXPECT_EQ(evaluate(QuadraticPoly(3, 10, 8), r->r2()), Rat(0));
}

TEST(FactorByGrouping, TraceFollowsTheSteps) {
    const auto r = factor_by_grouping({3, 10, 8});
    ASSERT_TRUE(r);
    EXPECT_EQ(states(r->trace), (std::vector<std::string>{"3x^2+4x+6x+8", "x(3x+4)+2(3x+4)", "(x+2)(3x+4)"}));
    EXPECT_EQ(r->factorization, factor_via_theorem({3, 10, 8})->factorization);

    const auto d = factor_by_grouping({1, 0, -4});
    ASSERT_TRUE(d);
    EXPECT_EQ(d->factorization, fac(1, -2, 1, 2));
    EXPECT_EQ(states(d->trace), (std::vector<std::string>{"x^2-2x+2x-4", "x(x-2)+2(x-2)", "(x+2)(x-2)"}));

    EXPECT_FALSE(factor_by_grouping({1, 1, 1}));
}

TEST(FactorMonic, Examples) {
    EXPECT_EQ(factor_monic({1, 5, 6}), fac(1, 2, 1, 3));
    EXPECT_EQ(factor_monic({1, 0, -4}), fac(1, -2, 1, 2));
    EXPECT_FALSE(factor_monic({1, 1, 1}));
    try {
        factor_monic({2, 3, 1});
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "monic method requires a=1");
    }
}

TEST(FactorByScaling, Examples) {
    const auto r = factor_by_scaling({3, 10, 8});
    ASSERT_TRUE(r);
    EXPECT_EQ(states(r->trace), (std::vector<std::string>{"(9x^2+30x+24)/3", "(y^2+10y+24)/3", "(y+4)(y+6)/3",
                                                          "(3x+4)(3x+6)/3", "(3x+4)(x+2)"}));
    EXPECT_EQ(r->factorization, fac(1, 2, 3, 4));

    EXPECT_EQ(factor_by_scaling({4, 0, -9})->factorization, fac(2, -3, 2, 3));
    EXPECT_FALSE(factor_by_scaling({2, 1, 1}));
    EXPECT_THROW(factor_by_scaling({1, 2, 1}), std::invalid_argument);
}

TEST(FactorByScaling, NegativeLeadAndZeroConstant) {
    for (const QuadraticPoly f : {QuadraticPoly(-6, 1, 2), QuadraticPoly(-4, 0, 0), QuadraticPoly(-3, 6, 0),
                                  QuadraticPoly(6, -5, 1)}) {
        const auto s = factor_by_scaling(f);
        ASSERT_TRUE(s);
        EXPECT_EQ(expand(s->factorization), f);
        EXPECT_EQ(s->factorization, factor_via_theorem(f)->factorization);
    }
}

TEST(DifferenceOfSquares, Examples) {
    EXPECT_EQ(try_difference_of_squares({4, 0, -9}), fac(2, -3, 2, 3));
    EXPECT_EQ(try_difference_of_squares({1, 0, -4}), fac(1, -2, 1, 2));
    EXPECT_FALSE(try_difference_of_squares({2, 0, -9}));
    EXPECT_FALSE(find_pq({2, 0, -9}));
    EXPECT_FALSE(try_difference_of_squares({4, 1, -9}));
    EXPECT_FALSE(try_difference_of_squares({4, 0, 9}));
}

TEST(DifferenceOfSquares, SharedFactorIsLeftToTheGeneralRoute) {
    // 4x^2 - 4: gcd(A, C) = 2, so gcd(p, a) = 4 rather than A and the shortcut does not apply.
    EXPECT_FALSE(try_difference_of_squares({4, 0, -4}));
    EXPECT_EQ(factor_auto({4, 0, -4}).trace.method, Method::theorem);
}

TEST(PerfectSquare, Examples) {
    EXPECT_EQ(try_perfect_square({1, 2, 1}), fac(1, 1, 1, 1));
    EXPECT_EQ(try_perfect_square({4, -12, 9}), fac(2, -3, 2, -3));
    EXPECT_FALSE(try_perfect_square({4, 10, 9}));
    EXPECT_FALSE(try_perfect_square({4, 8, 4}));
    EXPECT_EQ(try_perfect_square({1, 0, 0}), fac(1, 0, 1, 0));
}

TEST(Eisenstein, Examples) {
    EXPECT_EQ(eisenstein_irreducible({1, 2, 2}), EisensteinWitness(2));
    EXPECT_FALSE(find_pq({1, 2, 2}));
    EXPECT_FALSE(eisenstein_irreducible({2, 2, 2}));
    EXPECT_FALSE(eisenstein_irreducible({1, 4, 4}));
    EXPECT_FALSE(eisenstein_irreducible({1, 0, 2}));
    EXPECT_FALSE(eisenstein_irreducible({1, 2, 0}));
    // gcd(b, c) = 6: r = 2 fails (4 | 12), r = 3 qualifies.
    EXPECT_EQ(eisenstein_irreducible({1, 6, 12}), EisensteinWitness(3));
}

TEST(Reciprocal, FactorableEquivalence) {
    EXPECT_TRUE(reciprocal_factorable_equiv({3, 10, 8}));
    EXPECT_TRUE(factor_via_theorem({8, 10, 3}));
    EXPECT_FALSE(reciprocal_factorable_equiv({1, 1, 1}));
    EXPECT_TRUE(reciprocal_factorable_equiv({1, 0, -4}));
    EXPECT_THROW(reciprocal_factorable_equiv({1, 3, 0}), std::domain_error);
}

TEST(ClearDenominators, Examples) {
    EXPECT_EQ(clear_denominators({1, 2, 3, 2, 1, 1}), QuadraticPoly(2, 6, 4));
    EXPECT_EQ(clear_denominators({1, 1, 1, 1, 1, 1}), QuadraticPoly(1, 1, 1));
    EXPECT_EQ(clear_denominators({2, 3, -1, 3, -1, 3}), QuadraticPoly(18, -9, -9));
}

TEST(RationalRoots, Examples) {
    EXPECT_EQ(rational_has_rational_roots({1, 2, 3, 2, 1, 1}), PQWitness(2, 4));
    EXPECT_EQ(roots_via_theorem({2, 6, 4}), RootPair(Rat(-2), Rat(-1)));
    EXPECT_EQ(rational_roots({1, 2, 3, 2, 1, 1}), RootPair(Rat(-2), Rat(-1)));
    EXPECT_FALSE(rational_has_rational_roots({1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(rational_has_rational_roots({1, 1, 0, 1, -1, 1}), PQWitness(-1, 1));
}

TEST(FactorAuto, Routing) {
    EXPECT_EQ(factor_auto({4, 0, -9}).trace.method, Method::diff_squares);
    EXPECT_EQ(std::get<Factorization>(factor_auto({4, 0, -9}).outcome), fac(2, -3, 2, 3));
    EXPECT_EQ(factor_auto({3, 10, 8}).trace.method, Method::theorem);
    EXPECT_EQ(factor_auto({1, 2, 1}).trace.method, Method::perfect_square);

    const AutoResult irr = factor_auto({1, 2, 2});
    ASSERT_FALSE(irr.factored());
    const auto& report = std::get<IrreducibleReport>(irr.outcome);
    EXPECT_EQ(report.discriminant, -4);
    EXPECT_EQ(report.eisenstein, EisensteinWitness(2));

    const auto plain = std::get<IrreducibleReport>(factor_auto({1, 1, 1}).outcome);
    EXPECT_EQ(plain.discriminant, -3);
    EXPECT_FALSE(plain.eisenstein);
}

TEST(FactorWithMethod, NamesAndPreconditions) {
    EXPECT_EQ(method_from_name("grouping"), Method::grouping);
    EXPECT_FALSE(method_from_name("magic"));
    EXPECT_EQ(factor_with_method({1, 5, 6}, Method::monic).trace.method, Method::monic);
    EXPECT_THROW(factor_with_method({2, 5, 2}, Method::monic), std::invalid_argument);
    EXPECT_THROW(factor_with_method({2, 5, 3}, Method::diff_squares), std::invalid_argument);
    EXPECT_FALSE(factor_with_method({2, 1, 1}, Method::scaling).factored());
}

TEST(CrossStrategy, AgreeOnBox) {
    for (Int a = -10; a <= 10; ++a) {
        if (a == 0) continue;
        for (Int b = -10; b <= 10; ++b) {
            for (Int c = -10; c <= 10; ++c) {
                const QuadraticPoly f(a, b, c);
                const auto t = factor_via_theorem(f);
                const auto g = factor_by_grouping(f);
                ASSERT_EQ(t.has_value(), g.has_value());
                if (!t) continue;
                ASSERT_EQ(expand(t->factorization), f);
                ASSERT_EQ(g->factorization, t->factorization);
                if (a != 1) ASSERT_EQ(factor_by_scaling(f)->factorization, t->factorization);
                if (a == 1) ASSERT_EQ(factor_monic(f), t->factorization);
                if (auto ds = try_difference_of_squares(f)) ASSERT_EQ(*ds, t->factorization);
                if (auto ps = try_perfect_square(f)) ASSERT_EQ(*ps, t->factorization);
            }
        }
    }
}
