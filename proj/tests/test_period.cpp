#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace mirrorkit;

namespace {

PeriodSequence ints(std::initializer_list<long> xs) {
    PeriodSequence s;
    for (long x : xs) s.emplace_back(x);
    return s;
}

} // namespace

TEST(Period, ProjectivePlaneGolden) {
    EXPECT_EQ(classical_period(parse("x+y+1/(x*y)"), 12), ints({1, 0, 0, 6, 0, 0, 90, 0, 0, 1680, 0, 0, 34650}));
}

TEST(Period, MatchesBruteForceConstantTerms) {
    for (const char* text : {"x+y+1/(x*y)", "x+1/x+y+1/y", "b+(a+1)^2*a^-1*b^-2", "x+2*y-1/(x*y)+1/2*x/y"}) {
        auto f = parse(text);
        auto seq = classical_period(f, 7);
        for (unsigned k = 0; k <= 7; ++k) EXPECT_EQ(seq[k], oracle::constant_term_of_power(f, k)) << text << " k=" << k;
    }
}

TEST(Period, StreamingPrefixesAgree) {
    PeriodStream s(parse("x+1/x+y+1/y"));
    PeriodSequence short_run = s.extend_to(4);
    PeriodSequence long_run = s.extend_to(10);
    EXPECT_EQ(PeriodSequence(long_run.begin(), long_run.begin() + 5), short_run);
    EXPECT_EQ(long_run, classical_period(parse("x+1/x+y+1/y"), 10));
}

TEST(Period, ZeroPolynomialRejected) { EXPECT_THROW(classical_period(LaurentPolynomial(2), 3), Error); }

TEST(Period, KnownSeriesClosedForms) {
    EXPECT_EQ(known_series("projective-plane", 9), ints({1, 0, 0, 6, 0, 0, 90, 0, 0, 1680}));
    EXPECT_EQ(known_series("quadric-surface-product", 8), ints({1, 0, 4, 0, 36, 0, 400, 0, 4900}));
    EXPECT_EQ(known_series("del-pezzo-4", 6), ints({1, 0, 20, 96, 1188, 10560, 111440}));
    EXPECT_EQ(known_series("cubic-threefold", 8), ints({1, 0, 12, 0, 540, 0, 33600, 0, 2425500}));
    EXPECT_THROW(known_series("nonsense", 3), Error);
    KnownSeries constant{SeriesFamily::custom, [](std::size_t) { return Rational(1); }};
    EXPECT_EQ(known_series(constant, 3), ints({1, 1, 1, 1}));
}

TEST(Period, QuotientSharesPeriod) {
    auto f = classical_period(parse("x+1/x+y+1/y"), 8);
    auto g = classical_period(parse("x*y+y/x+1/(x*y)+x/y"), 8);
    EXPECT_EQ(f, g);
}

TEST(Period, ComparisonReportsFirstMismatch) {
    auto p2 = classical_period(parse("x+y+1/(x*y)"), 6);
    auto q = classical_period(parse("x+1/x+y+1/y"), 6);
    auto cmp = compare_sequences(p2, q, 6);
    EXPECT_FALSE(cmp.agree);
    EXPECT_EQ(*cmp.first_mismatch, 2u);
    EXPECT_TRUE(periods_agree(parse("x+y+1/(x*y)"), known_series("projective-plane", 12), 12).agree);
    EXPECT_THROW(periods_agree(parse("x+y+1/(x*y)"), p2, 12), Error);
}
