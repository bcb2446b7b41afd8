#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace mirrorkit;

namespace {

const MutationData kGolden{{2, -1}, parse("1+x*y^2")};

LaurentPolynomial shear(const LaurentPolynomial& f, const IntVector& w, const IntVector& s) {
    LaurentPolynomial g(f.rank());
    for (const auto& [e, c] : f.terms()) g.add_term(add(e, scale(s, dot(w, e))), c);
    return g;
}

} // namespace

TEST(Mutation, WeightDecompositionReassembles) {
    auto f = parse("2*x+x*y+2*y+y/x+2/x+1/(x*y)+2/y+x/y");
    auto slices = weight_decomposition(f, {1, 2});
    LaurentPolynomial sum(2);
    for (const auto& [level, p] : slices) {
        for (const auto& [e, c] : p.terms()) EXPECT_EQ(dot(IntVector{1, 2}, e), level);
        sum += p;
    }
    EXPECT_EQ(sum, f);
    EXPECT_THROW(weight_decomposition(f, {2, 4}), Error);
    EXPECT_THROW(weight_decomposition(f, {1, 0, 0}), Error);
}

TEST(Mutation, GoldenExampleIsMutable) {
    auto f = parse("x+y+1/(x*y)");
    auto test = is_mutable(f, kGolden);
    ASSERT_TRUE(test);
    ASSERT_EQ(test.witness.quotients.size(), 1u);
    EXPECT_EQ(test.witness.quotients.at(-1), parse("1/(x*y)"));
}

TEST(Mutation, GoldenExampleResult) {
    auto f = parse("x+y+1/(x*y)");
    auto expected = parse("1/(x*y) + x*(1+x*y^2)^2");
    EXPECT_EQ(mutate_raw(f, kGolden), expected);
    EXPECT_EQ(mutate(f, kGolden), canonicalize_shear(expected, kGolden.w));
    auto w = simplex_weights(newton_polytope(mutate(f, kGolden)));
    EXPECT_EQ(w, (std::vector<mpz_class>{1, 1, 4}));
}

TEST(Mutation, FailingLevelIsReported) {
    auto f = parse("x+y+1/(x*y)");
    MutationData bad{{2, -1}, parse("1+2*x*y^2")};
    auto test = is_mutable(f, bad);
    EXPECT_FALSE(test);
    EXPECT_EQ(*test.failing_level, -1);
    EXPECT_THROW(mutate(f, bad), Error);
}

TEST(Mutation, InvalidDataIsRejected) {
    auto f = parse("x+y+1/(x*y)");
    EXPECT_THROW(is_mutable(f, MutationData{{2, -2}, parse("1+x*y")}), Error);
    EXPECT_THROW(is_mutable(f, MutationData{{2, -1}, parse("1+x")}), Error);
    EXPECT_THROW(is_mutable(f, MutationData{{2, -1}, LaurentPolynomial(2)}), Error);
}

TEST(Mutation, NoNegativeSlicesMeansMutable) {
    auto f = parse("x+x*y");
    auto test = is_mutable(f, MutationData{{1, 0}, parse("1+y")});
    EXPECT_TRUE(test);
    EXPECT_TRUE(test.witness.quotients.empty());
}

TEST(Mutation, ShearCanonicalizationIsAClassInvariant) {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<Int> d(-3, 3);
    auto f = parse("x+y+1/(x*y)");
    auto g = mutate_raw(f, kGolden);
    auto canon = canonicalize_shear(g, kGolden.w);
    EXPECT_EQ(canonicalize_shear(canon, kGolden.w), canon);
    for (int trial = 0; trial < 30; ++trial) {
        Int k = d(rng);
        IntVector s{k, 2 * k}; // spans w-perp for w = (2,-1)
        EXPECT_EQ(canonicalize_shear(shear(g, kGolden.w, s), kGolden.w), canon);
    }
}

TEST(Mutation, InverseMutationReturnsUpToShear) {
    auto f = parse("x+y+1/(x*y)");
    auto g = mutate(f, kGolden);
    MutationData back{negate(kGolden.w), kGolden.factor};
    ASSERT_TRUE(is_mutable(g, back));
    EXPECT_EQ(canonicalize_shear(mutate_raw(g, back), kGolden.w), canonicalize_shear(f, kGolden.w));
}

TEST(Mutation, EnumerationOnProjectivePlane) {
    auto found = enumerate_mutations(parse("x+y+1/(x*y)"), {12, 6});
    EXPECT_FALSE(found.partial);
    ASSERT_EQ(found.mutations.size(), 3u);
    bool golden = false;
    for (const auto& m : found.mutations) {
        EXPECT_EQ(m.degree, 1);
        if (m.data.w == kGolden.w && m.data.factor == kGolden.factor) golden = true;
    }
    EXPECT_TRUE(golden);
}

TEST(Mutation, EnumerationOnDelPezzoFour) {
    auto h = parse("2*x+x*y+2*y+y/x+2/x+1/(x*y)+2/y+x/y");
    auto found = enumerate_mutations(h, {12, 6});
    EXPECT_EQ(found.mutations.size(), 8u);
    for (const auto& m : found.mutations) {
        EXPECT_TRUE(is_mutable(h, m.data));
        EXPECT_EQ(m.data.factor.terms().begin()->first, IntVector(2, 0));
        for (const auto& [e, c] : m.data.factor.terms()) {
            EXPECT_GT(c, 0);
            EXPECT_EQ(c.get_den(), 1);
        }
    }
}

TEST(Mutation, EnumerationRespectsBounds) {
    auto g = parse("x*y+y/x+1/(x*y)+x/y");
    EXPECT_TRUE(enumerate_mutations(g, {12, 1}).mutations.empty());
    EXPECT_FALSE(enumerate_mutations(g, {12, 2}).mutations.empty());
    EXPECT_THROW(enumerate_mutations(parse("x+y+1"), {12, 6}), Error);
    EXPECT_THROW(enumerate_mutations(parse("x+y+1/(x*y)"), {0, 6}), Error);
}

TEST(Mutation, EnumerationIndependentOfThreads) {
    auto h = parse("2*x+x*y+2*y+y/x+2/x+1/(x*y)+2/y+x/y");
    auto one = enumerate_mutations(h, {12, 6}, 1);
    auto four = enumerate_mutations(h, {12, 6}, 4);
    ASSERT_EQ(one.mutations.size(), four.mutations.size());
    for (std::size_t i = 0; i < one.mutations.size(); ++i) EXPECT_EQ(one.mutations[i].data, four.mutations[i].data);
}

TEST(Mutation, ExtraFactorsAreHonoured) {
    auto f = parse("x+y+1/(x*y)");
    auto found = enumerate_mutations(f, {12, 6}, 1, {parse("1+x*y^2")});
    EXPECT_EQ(found.mutations.size(), 3u);
}

TEST(Mutation, RankThreeSearchIsFlaggedPartial) {
    auto f = parse("x+y+z+1/(x*y*z)");
    auto found = enumerate_mutations(f, {4, 3});
    EXPECT_TRUE(found.partial);
    EXPECT_FALSE(found.mutations.empty());
    auto base = classical_period(f, 8);
    for (const auto& m : found.mutations) EXPECT_EQ(classical_period(mutate(f, m.data), 8), base);
}
