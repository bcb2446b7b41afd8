#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace mirrorkit;

namespace {

const MutationBounds kBounds{12, 6};
const char* kH = "2*x+x*y+2*y+y/x+2/x+1/(x*y)+2/y+x/y";

} // namespace

TEST(Mmlp, SeedSetOfProjectivePlane) {
    auto s = seed_set(parse("x+y+1/(x*y)"), {3, 2});
    EXPECT_EQ(s.seeds.size(), 3u);
    EXPECT_FALSE(s.bound_limited);
    for (const auto& m : s.seeds) EXPECT_TRUE(is_mutable(parse("x+y+1/(x*y)"), m));
}

TEST(Mmlp, SeedSetPreconditions) {
    EXPECT_THROW(seed_set(parse("2*x+y+1/(x*y)"), kBounds), Error);
    EXPECT_THROW(seed_set(parse("x+y+1/(x*y)+1"), kBounds), Error);
    try {
        seed_set(parse("x+y+1/(x*y)+3"), kBounds);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::nonzero_constant_term);
    }
}

TEST(Mmlp, EmptySeedSetIsBoundLimited) {
    auto s = seed_set(parse("x*y+y/x+1/(x*y)+x/y"), {12, 1});
    EXPECT_TRUE(s.seeds.empty());
    EXPECT_TRUE(s.bound_limited);
}

TEST(Mmlp, ProjectivePlaneSpaceIsAPoint) {
    auto f = parse("x+y+1/(x*y)");
    auto space = coefficient_space(newton_polytope(f), seed_set(f, kBounds));
    EXPECT_TRUE(space.coordinates.empty());
    EXPECT_EQ(space.dimension(), 0u);
    EXPECT_EQ(space.polynomial_at(space.basepoint), f);
}

TEST(Mmlp, SquareWithDelPezzoSeedsGivesH) {
    auto h = parse(kH);
    auto P = polytope_from_vertices({{1, 1}, {-1, 1}, {1, -1}, {-1, -1}});
    auto space = coefficient_space(P, seed_set(h, kBounds));
    ASSERT_TRUE(space.feasible);
    EXPECT_EQ(space.dimension(), 0u);
    EXPECT_EQ(space.polynomial_at(space.basepoint), h);
}

TEST(Mmlp, EmptySeedSetLeavesEveryFreePoint) {
    auto P = polytope_from_vertices({{1, 1}, {-1, 1}, {1, -1}, {-1, -1}});
    auto space = coefficient_space(P, SeedSet{});
    EXPECT_EQ(space.dimension(), 4u);
}

TEST(Mmlp, SelfMembership) {
    for (const char* text : {"x+y+1/(x*y)", kH, "x+1/x+y+1/y", "x+y+z+1/(x*y*z)"}) {
        auto f = parse(text);
        auto space = coefficient_space(newton_polytope(f), seed_set(f, {4, 3}));
        EXPECT_TRUE(space.contains(f)) << text;
    }
}

TEST(Mmlp, MoreSeedsNeverEnlargeTheSpace) {
    auto h = parse(kH);
    auto P = newton_polytope(h);
    auto full = seed_set(h, kBounds);
    SeedSet half = full;
    half.seeds.resize(full.seeds.size() / 2);
    SeedSet none;
    auto big = coefficient_space(P, none);
    auto mid = coefficient_space(P, half);
    auto small = coefficient_space(P, full);
    EXPECT_LE(small.dimension(), mid.dimension());
    EXPECT_LE(mid.dimension(), big.dimension());
    EXPECT_TRUE(mid.contains(small.polynomial_at(small.basepoint)));
    EXPECT_TRUE(big.contains(mid.polynomial_at(mid.basepoint)));
    for (const auto& d : mid.directions) {
        RationalVector p = mid.basepoint;
        for (std::size_t j = 0; j < p.size(); ++j) p[j] += d[j];
        EXPECT_TRUE(big.contains(mid.polynomial_at(p)));
    }
}

TEST(Mmlp, RandomPointsOfTheSpaceAreMutable) {
    auto h = parse(kH);
    auto P = newton_polytope(h);
    auto full = seed_set(h, kBounds);
    SeedSet one = full;
    one.seeds.resize(2); // a single edge direction, leaving freedom
    auto space = coefficient_space(P, one);
    ASSERT_GT(space.dimension(), 0u);
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 3; ++trial) {
        RationalVector t;
        for (std::size_t i = 0; i < space.dimension(); ++i) t.emplace_back(d(rng), 1 + trial);
        auto f = space.polynomial_at(space.point(t));
        for (const auto& seed : one.seeds) EXPECT_TRUE(is_mutable(f, seed));
    }
}

TEST(Mmlp, RigidityVerdicts) {
    auto p2 = is_rigid(parse("x+y+1/(x*y)"), kBounds);
    EXPECT_EQ(p2.status, RigidityStatus::rigid_within_bounds);
    EXPECT_EQ(p2.bounds.w_max, 12);
    auto h = is_rigid(parse(kH), kBounds);
    EXPECT_EQ(h.status, RigidityStatus::rigid_within_bounds);
    EXPECT_TRUE(h.nonnegative_integral);
    EXPECT_EQ(to_string(h.status), "rigid-within-bounds");
}

TEST(Mmlp, PositiveDimensionIsNotRigid) {
    auto f = parse("x+y+1/x+1/y+x*y+x/y");
    auto v = is_rigid(f, {1, 1});
    EXPECT_EQ(v.status, RigidityStatus::not_rigid);
    EXPECT_GT(v.dimension, 0u);
    EXPECT_EQ(v.bounds.w_max, 1);
    EXPECT_EQ(is_rigid(f, kBounds).status, RigidityStatus::rigid_within_bounds);
}

TEST(Mmlp, EmptySeedSetIsInconclusive) {
    auto v = is_rigid(parse("x*y+y/x+1/(x*y)+x/y+x"), {1, 1});
    EXPECT_EQ(v.status, RigidityStatus::inconclusive);
    EXPECT_TRUE(v.seeds.seeds.empty());
}

TEST(Mmlp, IndexTwoQuotientFailsDistinctly) {
    try {
        is_rigid(parse("x*y+y/x+1/(x*y)+x/y"), kBounds);
        FAIL() << "expected a lattice index error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::lattice_index);
    }
}
