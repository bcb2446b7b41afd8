#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace mirrorkit;

TEST(Lattice, GcdAndPrimitive) {
    EXPECT_EQ(gcd_of(IntVector{4, -6, 10}), 2);
    EXPECT_TRUE(is_primitive(IntVector{2, -1}));
    EXPECT_FALSE(is_primitive(IntVector{2, -4}));
    EXPECT_FALSE(is_primitive(IntVector{0, 0}));
    EXPECT_EQ(primitive_part(IntVector{-4, 6}), (IntVector{-2, 3}));
}

TEST(Lattice, DeterminantMatchesCofactorExpansion) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> d(-9, 9);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            IntMatrix m(n, IntVector(n));
            for (auto& row : m)
                for (auto& x : row) x = d(rng);
            EXPECT_EQ(determinant(m), oracle::laplace_determinant(m));
        }
}

TEST(Lattice, UnimodularInverse) {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            IntMatrix m = oracle::random_unimodular(n, rng);
            ASSERT_TRUE(is_unimodular(m));
            EXPECT_EQ(multiply(m, inverse_unimodular(m)), identity_matrix(n));
        }
    EXPECT_THROW(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), Error);
}

TEST(Lattice, CompleteToUnimodularPutsWeightLast) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Int> d(-7, 7);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 40; ++trial) {
            IntVector w(n);
            for (auto& x : w) x = d(rng);
            if (is_zero_vector(w)) continue;
            w = primitive_part(w);
            IntMatrix V = complete_to_unimodular(w);
            ASSERT_TRUE(is_unimodular(V));
            for (std::size_t j = 0; j < n; ++j) {
                Int s = 0;
                for (std::size_t i = 0; i < n; ++i) s += w[i] * V[i][j];
                EXPECT_EQ(s, j + 1 == n ? 1 : 0);
            }
        }
}

TEST(Lattice, HermiteRowsGiveIndex) {
    auto h = hermite_rows(IntMatrix{{1, 1}, {-1, 1}, {1, -1}, {-1, -1}});
    ASSERT_EQ(h.size(), 2u);
    EXPECT_EQ(abs(h[0][0] * h[1][1]), 2);
}

TEST(Linalg, NullspaceVectorsAreAnnihilated) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 1 + trial % 4, cols = 2 + trial % 5;
        RationalMatrix a(rows, RationalVector(cols));
        for (auto& r : a)
            for (auto& x : r) x = d(rng);
        auto ns = nullspace(a, cols);
        EXPECT_EQ(ns.size() + rank(a, cols), cols);
        for (const auto& v : ns)
            for (const auto& r : a) {
                mpq_class s = 0;
                for (std::size_t j = 0; j < cols; ++j) s += r[j] * v[j];
                EXPECT_EQ(s, 0);
            }
    }
}

TEST(Linalg, SolveAffine) {
    RationalMatrix a{{1, 1, 0}, {0, 1, 1}};
    RationalVector b{3, 5};
    auto s = solve_affine(a, b, 3);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->directions.size(), 1u);
    EXPECT_EQ(s->point[0] + s->point[1], 3);
    EXPECT_EQ(s->point[1] + s->point[2], 5);
    EXPECT_FALSE(solve_affine(RationalMatrix{{1, 1}, {2, 2}}, RationalVector{1, 3}, 2));
}
