#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace mirrorkit;

TEST(Text, ParsesProjectivePlaneInSeveralSpellings) {
    auto a = parse("x+y+1/(x*y)");
    auto b = parse("x + y + x^-1*y^-1");
    auto c = parse("x1+x2+x1^-1*x2^-1");
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    EXPECT_EQ(a.rank(), 2u);
}

TEST(Text, ExpandsProductsAndPowers) {
    auto f = parse("b+(a+1)^2*a^-1*b^-2");
    EXPECT_EQ(f, parse("y + x*y^-2 + 2*y^-2 + x^-1*y^-2"));
    EXPECT_EQ(parse("(x+y+1)^3/(x*y*z)+z").size(), 11u);
}

TEST(Text, RankHint) {
    EXPECT_EQ(parse("x", 3).rank(), 3u);
    EXPECT_EQ(parse("5").rank(), 1u);
    EXPECT_THROW(parse("x*z", 2), Error);
}

TEST(Text, Errors) {
    EXPECT_THROW(parse("x+"), ParseError);
    EXPECT_THROW(parse("x*a"), ParseError);
    EXPECT_THROW(parse("(x+1)^-1"), ParseError);
    EXPECT_THROW(parse("x/(1+y)"), ParseError);
    EXPECT_THROW(parse("q"), ParseError);
    EXPECT_THROW(parse("x $ y"), ParseError);
    try {
        parse("x+)");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2u);
    }
}

TEST(Text, FormatIsCanonical) {
    EXPECT_EQ(format(parse("x+y+1/(x*y)")), "x+y+x^-1*y^-1");
    EXPECT_EQ(format(parse("-1/2*x^2+3")), "-1/2*x^2+3");
    EXPECT_EQ(format(LaurentPolynomial(2)), "0");
    EXPECT_EQ(format(parse("x1+x5")), "x1+x5");
}

TEST(Text, RoundTripOnRandomPolynomials) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + trial % 6;
        auto f = oracle::random_polynomial(n, 1 + trial % 7, 4, rng);
        f *= Rational(1 + trial % 3, 1 + trial % 5);
        std::string s = format(f);
        EXPECT_EQ(parse(s, n), f) << s;
        EXPECT_EQ(format(parse(s, n)), s);
    }
}
