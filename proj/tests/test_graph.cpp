#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace mirrorkit;

namespace {

const MutationBounds kBounds{12, 6};

std::set<std::vector<mpz_class>> weights_at(const MutationGraph& g, std::size_t depth) {
    std::set<std::vector<mpz_class>> out;
    for (const auto& n : g.nodes)
        if (n.depth == depth) out.insert(simplex_weights(newton_polytope(n.polynomial)));
    return out;
}

} // namespace

TEST(Graph, DepthZeroIsASingleNode) {
    auto g = build_graph(parse("x+y+1/(x*y)"), 0, kBounds);
    EXPECT_EQ(g.nodes.size(), 1u);
    EXPECT_TRUE(g.edges.empty());
}

TEST(Graph, DepthOneFromProjectivePlane) {
    auto g = build_graph(parse("x+y+1/(x*y)"), 1, kBounds);
    EXPECT_GE(g.nodes.size(), 2u);
    EXPECT_GE(g.edges.size(), 3u);
    EXPECT_EQ(weights_at(g, 1), (std::set<std::vector<mpz_class>>{{1, 1, 4}}));
    for (const auto& n : g.nodes) EXPECT_EQ(n.label, normal_form(newton_polytope(n.polynomial)));
}

TEST(Graph, DepthTwoReachesOneFourTwentyFive) {
    auto g = build_graph(parse("x+y+1/(x*y)"), 2, kBounds);
    EXPECT_TRUE(weights_at(g, 2).count({1, 4, 25}));
}

TEST(Graph, EveryNodeKeepsThePeriod) {
    auto f = parse("x+y+1/(x*y)");
    auto g = build_graph(f, 2, kBounds);
    auto base = classical_period(f, 10);
    for (const auto& n : g.nodes) EXPECT_EQ(classical_period(n.polynomial, 10), base) << format(n.polynomial);
}

TEST(Graph, EdgesAreNotDuplicated) {
    auto g = build_graph(parse("2*x+x*y+2*y+y/x+2/x+1/(x*y)+2/y+x/y"), 1, kBounds);
    std::set<std::pair<std::size_t, std::string>> targets;
    for (const auto& e : g.edges)
        EXPECT_TRUE(targets.emplace(e.from, format(g.nodes[e.to].polynomial) + "|" + format(e.label.factor)).second);
}

TEST(Graph, ThreadCountDoesNotChangeTheGraph) {
    auto f = parse("x+y+1/(x*y)");
    auto a = build_graph(f, 3, kBounds, 1);
    auto b = build_graph(f, 3, kBounds, 4);
    EXPECT_EQ(export_dot(a), export_dot(b));
    ASSERT_EQ(a.nodes.size(), b.nodes.size());
    for (std::size_t i = 0; i < a.nodes.size(); ++i) EXPECT_EQ(a.nodes[i].polynomial, b.nodes[i].polynomial);
}

TEST(Graph, NonFanoSeedRejected) { EXPECT_THROW(build_graph(parse("x+y+1"), 1, kBounds), Error); }

TEST(Markov, TreeExamples) {
    auto t2 = markov_tree(2);
    std::vector<MarkovTriple> triples;
    for (const auto& n : t2) triples.push_back(n.triple);
    EXPECT_EQ(triples, (std::vector<MarkovTriple>{{1, 1, 1}, {1, 1, 2}, {1, 2, 5}}));
    std::set<MarkovTriple> depth3;
    for (const auto& n : markov_tree(3))
        if (n.depth == 3) depth3.insert(n.triple);
    EXPECT_EQ(depth3, (std::set<MarkovTriple>{{1, 5, 13}, {2, 5, 29}}));
}

TEST(Markov, EveryNodeSatisfiesTheEquation) {
    for (const auto& n : markov_tree(8)) EXPECT_TRUE(is_markov(n.triple));
}

TEST(Markov, TreeContainsEverySmallTriple) {
    auto brute = oracle::markov_triples_up_to(200);
    std::set<std::array<Int, 3>> tree;
    for (const auto& n : markov_tree(10))
        if (n.triple[2] <= 200) tree.insert({n.triple[0].get_si(), n.triple[1].get_si(), n.triple[2].get_si()});
    EXPECT_EQ(tree, brute);
}

TEST(Markov, CorrespondenceWithMutationGraph) {
    auto report = p2_correspondence_check(3, kBounds);
    EXPECT_TRUE(report.ok());
    ASSERT_EQ(report.levels.size(), 4u);
    EXPECT_TRUE(report.levels[1].graph_weights.count({1, 1, 4}));
    EXPECT_TRUE(report.levels[2].graph_weights.count({1, 4, 25}));
    EXPECT_TRUE(report.levels[3].graph_weights.count({4, 25, 841}));
    EXPECT_TRUE(report.levels[3].graph_weights.count({1, 25, 169}));
}

TEST(Markov, TightBoundsAreReportedNotHidden) {
    auto report = p2_correspondence_check(3, {1, 6});
    EXPECT_FALSE(report.ok());
}

TEST(Dot, EmptyGraphIsValid) {
    MutationGraph g;
    EXPECT_EQ(export_dot(g), "digraph mutation_graph {\n}\n");
    EXPECT_EQ(count_dot_nodes(export_dot(g)), 0u);
}

TEST(Dot, NodeCountRoundTrips) {
    auto g = build_graph(parse("x+y+1/(x*y)"), 2, kBounds);
    auto dot = export_dot(g);
    EXPECT_EQ(count_dot_nodes(dot), g.nodes.size());
    EXPECT_NE(dot.find("(1,4,25)"), std::string::npos);
    EXPECT_NE(dot.find("wmax=12"), std::string::npos);
    EXPECT_EQ(dot, export_dot(build_graph(parse("x+y+1/(x*y)"), 2, kBounds)));
}
