#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

void expect_none(const props::Failures& f) {
    EXPECT_TRUE(f.empty()) << f.size() << " failures, first: " << (f.empty() ? "" : f.front());
}

} // namespace

TEST(Properties, MutationKeepsThePeriod) {
    std::size_t checked = 0;
    expect_none(props::mutation_period_invariance(15, {12, 6}, &checked));
    EXPECT_GT(checked, 10u);
}

TEST(Properties, UnimodularMapsKeepThePeriod) { expect_none(props::unimodular_period_invariance(100, 79)); }

TEST(Properties, DualOfDual) { expect_none(props::dual_of_dual()); }

TEST(Properties, Pick) { expect_none(props::pick(60, 83)); }

TEST(Properties, NormalFormInvariance) { expect_none(props::normal_form_invariance(100, 89)); }
