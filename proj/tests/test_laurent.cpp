#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace mirrorkit;

TEST(Laurent, AddTermMergesAndDropsZeros) {
    LaurentPolynomial f(2);
    f.add_term({1, 0}, 2);
    f.add_term({1, 0}, -2);
    EXPECT_TRUE(f.is_zero());
    f.add_term({0, 1}, Rational(1, 2));
    f.add_term({0, 1}, Rational(1, 2));
    EXPECT_EQ(f.coefficient({0, 1}), 1);
    EXPECT_EQ(f.size(), 1u);
}

TEST(Laurent, RankMismatchIsRejected) {
    LaurentPolynomial f(2);
    EXPECT_THROW(f.add_term({1, 0, 0}, 1), Error);
    EXPECT_THROW(f.coefficient({1}), Error);
    EXPECT_THROW(f + LaurentPolynomial(3), Error);
}

TEST(Laurent, ProductMatchesNaiveConvolution) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + trial % 3;
        auto a = oracle::random_polynomial(n, 6, 3, rng);
        auto b = oracle::random_polynomial(n, 6, 3, rng);
        EXPECT_EQ(a * b, oracle::naive_product(a, b));
    }
}

TEST(Laurent, RingAxiomsOnRandomInputs) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = oracle::random_polynomial(2, 5, 2, rng);
        auto b = oracle::random_polynomial(2, 5, 2, rng);
        auto c = oracle::random_polynomial(2, 5, 2, rng);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(Laurent, PowerAndArith) {
    auto f = parse("x+1/x");
    EXPECT_EQ(power(f, 0), LaurentPolynomial::constant(1, 1));
    EXPECT_EQ(power(f, 3), f * f * f);
    EXPECT_EQ(arith(f, f, ArithOp::sub), LaurentPolynomial(1));
    EXPECT_EQ(coefficient(power(f, 4), {0}), 6);
}

TEST(Laurent, UnimodularSubstitutionPreservesConstantTerms) {
    std::mt19937_64 rng(29);
    auto f = parse("x+y+1/(x*y)");
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix m = oracle::random_unimodular(2, rng);
        auto g = substitute_unimodular(f, m);
        for (unsigned k = 0; k <= 6; ++k) EXPECT_EQ(power(g, k).constant_term(), power(f, k).constant_term());
    }
    EXPECT_THROW(substitute_unimodular(f, IntMatrix{{2, 0}, {0, 1}}), Error);
}

TEST(Laurent, LatticeIndex) {
    EXPECT_EQ(*exponent_lattice_index(parse("x+y+1/(x*y)")).index, 1);
    EXPECT_EQ(*exponent_lattice_index(parse("x*y+y/x+1/(x*y)+x/y")).index, 2);
    auto degenerate = exponent_lattice_index(parse("x+1/x", 2));
    EXPECT_EQ(degenerate.rank, 1u);
    EXPECT_FALSE(degenerate.index);
    EXPECT_THROW(exponent_lattice_index(LaurentPolynomial(2)), Error);
}

TEST(Laurent, ExactDivision) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + trial % 3;
        auto a = oracle::random_polynomial(n, 4, 2, rng);
        auto b = oracle::random_polynomial(n, 3, 2, rng);
        if (a.is_zero() || b.is_zero()) continue;
        auto q = divide_exact(a * b, b);
        ASSERT_TRUE(q);
        EXPECT_EQ(*q, a);
    }
    EXPECT_FALSE(divide_exact(parse("1+x+x^2"), parse("1+x")));
    EXPECT_EQ(*divide_exact(parse("x^-2-1"), parse("x^-1-1")), parse("x^-1+1"));
}
