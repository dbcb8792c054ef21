#include <gtest/gtest.h>

#include <algorithm>

#include "quadbox/oracle.hpp"

using namespace quadbox;

namespace {

Factorization fac(Int p1, Int p2, Int q1, Int q2) { return {{p1, p2}, {q1, q2}}; }

}  // namespace

TEST(BruteForceFactor, Examples) {
    EXPECT_EQ(oracle::brute_force_factor({3, 10, 8}), fac(1, 2, 3, 4));
    EXPECT_EQ(oracle::brute_force_factor({1, 2, 1}), fac(1, 1, 1, 1));
    EXPECT_EQ(oracle::brute_force_factor({4, 0, -4}), fac(1, -1, 4, 4));
    EXPECT_EQ(oracle::brute_force_factor({2, 6, 0}), fac(1, 0, 2, 6));
    EXPECT_FALSE(oracle::brute_force_factor({1, 1, 1}));
    EXPECT_FALSE(oracle::brute_force_factor({2, 0, -9}));
}

TEST(AllIntegerFactorizations, ExpandBack) {
    for (const QuadraticPoly f : {QuadraticPoly(3, 10, 8), QuadraticPoly(4, 0, -4), QuadraticPoly(-6, 0, 0)}) {
        const auto all = oracle::all_integer_factorizations(f);
        ASSERT_FALSE(all.empty());
        for (const auto& g : all) EXPECT_EQ(expand(g), f);
    }
    // 4x^2 - 4 splits its content three ways.
    std::vector<Factorization> orbits;
    for (const auto& f : oracle::all_integer_factorizations({4, 0, -4})) {
        const Factorization c = canonicalize(f);
        if (std::find(orbits.begin(), orbits.end(), c) == orbits.end()) orbits.push_back(c);
    }
    EXPECT_EQ(orbits.size(), 3u);
    EXPECT_TRUE(oracle::all_integer_factorizations({1, 1, 1}).empty());
}

TEST(BruteForceRationalRoots, Examples) {
    EXPECT_EQ(oracle::brute_force_rational_roots({3, 10, 8}), RootPair(Rat(-2), Rat(-4, 3)));
    EXPECT_EQ(oracle::brute_force_rational_roots({1, 2, 1}), RootPair(Rat(-1), Rat(-1)));
    EXPECT_EQ(oracle::brute_force_rational_roots({2, 6, 0}), RootPair(Rat(-3), Rat(0)));
    EXPECT_EQ(oracle::brute_force_rational_roots({5, 0, 0}), RootPair(Rat(0), Rat(0)));
    EXPECT_FALSE(oracle::brute_force_rational_roots({1, 0, -2}));
}
