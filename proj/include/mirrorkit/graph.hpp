#pragma once

// Depth-limited mutation graphs and the Markov tree.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstddef>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mirrorkit/error.hpp"
#include "mirrorkit/laurent.hpp"
#include "mirrorkit/mutation.hpp"
#include "mirrorkit/polytope.hpp"

namespace mirrorkit {

/// L(w, F): the line through w together with the translation class of F.
struct EdgeLabel {
    IntVector line;
    LaurentPolynomial factor;

    static EdgeLabel of(const MutationData& m) { return {weight_line(m.w), canonical_factor(m.factor)}; }

    bool operator==(const EdgeLabel& o) const { return line == o.line && factor == o.factor; }
    bool operator<(const EdgeLabel& o) const {
        if (line != o.line) return line < o.line;
        return factor.terms() < o.factor.terms();
    }
};

struct GraphNode {
    std::size_t id = 0;
    LaurentPolynomial polynomial;
    NormalForm label;
    std::size_t depth = 0;
    std::optional<std::size_t> parent;
    std::optional<MutationData> via; // mutation from the parent
};

struct GraphEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    EdgeLabel label;
    MutationData mutation;
};

struct MutationGraph {
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    MutationBounds bounds;
    std::size_t depth = 0;
    bool partial = false;
};

namespace detail {

struct Expansion {
    LaurentPolynomial child;
    MutationData mutation;
    EdgeLabel label;
};

inline std::vector<Expansion> expand_node(const GraphNode& node, const MutationBounds& bounds, bool& partial) {
    auto found = enumerate_mutations(node.polynomial, bounds);
    partial = found.partial;
    std::vector<Expansion> out;
    std::set<std::pair<EdgeLabel, LaurentPolynomial::TermMap>> seen;
    for (auto& m : found.mutations) {
        if (node.via && m.data.w == negate(node.via->w) &&
            canonical_factor(m.data.factor) == canonical_factor(node.via->factor))
            continue; // inverse of the edge we arrived by
        LaurentPolynomial child = mutate(node.polynomial, m.data);
        EdgeLabel label = EdgeLabel::of(m.data);
        if (!seen.emplace(label, child.terms()).second) continue;
        out.push_back({std::move(child), m.data, std::move(label)});
    }
    return out;
}

} // namespace detail

/// Breadth-first exploration from f. Every mutation found at a node produces
/// a new exploration state; states with equal polytope labels stay distinct.
inline MutationGraph build_graph(const LaurentPolynomial& f, std::size_t depth, const MutationBounds& bounds,
                                 unsigned threads = 1) {
    LatticePolytope P = newton_polytope(f);
    if (!P.is_full_dimensional() || !is_fano(P).is_fano())
        throw Error(ErrorKind::not_fano, "mutation graph needs a Fano Newton polytope");
    MutationGraph g;
    g.bounds = bounds;
    g.depth = depth;
    g.nodes.push_back(GraphNode{0, f, normal_form(P), 0, std::nullopt, std::nullopt});
    std::vector<std::size_t> frontier{0};
    threads = std::max(1u, threads);
    for (std::size_t d = 0; d < depth && !frontier.empty(); ++d) {
        std::vector<std::vector<detail::Expansion>> results(frontier.size());
        std::vector<char> partial(frontier.size(), 0);
        unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, frontier.size()));
        auto work = [&](std::size_t start) {
            for (std::size_t i = start; i < frontier.size(); i += workers) {
                bool p = false;
                results[i] = detail::expand_node(g.nodes[frontier[i]], bounds, p);
                partial[i] = p;
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t);
            for (auto& th : pool) th.join();
        }
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            g.partial = g.partial || partial[i];
            for (auto& e : results[i]) {
                std::size_t id = g.nodes.size();
                NormalForm nf = normal_form(newton_polytope(e.child));
                g.nodes.push_back(GraphNode{id, std::move(e.child), std::move(nf), d + 1, frontier[i], e.mutation});
                g.edges.push_back(GraphEdge{frontier[i], id, std::move(e.label), std::move(e.mutation)});
                next.push_back(id);
            }
        }
        frontier = std::move(next);
    }
    return g;
}

using MarkovTriple = std::array<mpz_class, 3>;

inline bool is_markov(const MarkovTriple& t) {
    return t[0] * t[0] + t[1] * t[1] + t[2] * t[2] == 3 * t[0] * t[1] * t[2];
}

struct MarkovNode {
    MarkovTriple triple;
    std::size_t depth = 0;
    std::optional<std::size_t> parent;
};

/// Tree of Markov triples rooted at (1,1,1). Children replace one entry a by
/// 3bc - a; a child equal to a triple on its path is pruned, and equal
/// siblings are merged.
inline std::vector<MarkovNode> markov_tree(std::size_t depth) {
    std::vector<MarkovNode> nodes{{MarkovTriple{1, 1, 1}, 0, std::nullopt}};
    std::vector<std::size_t> frontier{0};
    for (std::size_t d = 0; d < depth; ++d) {
        std::vector<std::size_t> next;
        for (std::size_t id : frontier) {
            std::set<MarkovTriple> on_path;
            for (std::optional<std::size_t> a = id; a; a = nodes[*a].parent) on_path.insert(nodes[*a].triple);
            std::set<MarkovTriple> children;
            const MarkovTriple t = nodes[id].triple;
            for (int i = 0; i < 3; ++i) {
                MarkovTriple c = t;
                c[i] = 3 * t[(i + 1) % 3] * t[(i + 2) % 3] - t[i];
                std::sort(c.begin(), c.end());
                if (!on_path.count(c)) children.insert(c);
            }
            for (const auto& c : children) {
                next.push_back(nodes.size());
                nodes.push_back({c, d + 1, id});
            }
        }
        frontier = std::move(next);
    }
    return nodes;
}

using WeightVector = std::vector<mpz_class>;

struct CorrespondenceLevel {
    std::size_t depth = 0;
    std::set<WeightVector> graph_weights;
    std::set<WeightVector> tree_weights;
    std::size_t graph_nodes = 0;
    bool matches() const { return graph_weights == tree_weights; }
};

struct CorrespondenceReport {
    std::vector<CorrespondenceLevel> levels;
    MutationBounds bounds;
    bool all_simplices = true;
    bool ok() const {
        return all_simplices && std::all_of(levels.begin(), levels.end(), [](const auto& l) { return l.matches(); });
    }
};

/// Compares the weights of the simplices reached from x+y+1/xy with the
/// squared Markov triples, depth by depth, as sets of weight vectors.
inline CorrespondenceReport p2_correspondence_check(std::size_t depth, const MutationBounds& bounds,
                                                    unsigned threads = 1) {
    LaurentPolynomial f(2);
    f.add_term({1, 0}, 1);
    f.add_term({0, 1}, 1);
    f.add_term({-1, -1}, 1);
    MutationGraph g = build_graph(f, depth, bounds, threads);
    auto tree = markov_tree(depth);
    CorrespondenceReport report;
    report.bounds = bounds;
    report.levels.resize(depth + 1);
    for (std::size_t d = 0; d <= depth; ++d) report.levels[d].depth = d;
    for (const auto& node : g.nodes) {
        auto& level = report.levels[node.depth];
        ++level.graph_nodes;
        LatticePolytope P = newton_polytope(node.polynomial);
        if (P.vertices().size() != 3) {
            report.all_simplices = false;
            continue;
        }
        level.graph_weights.insert(simplex_weights(P));
    }
    for (const auto& node : tree) {
        WeightVector w;
        for (const auto& x : node.triple) w.push_back(x * x);
        report.levels[node.depth].tree_weights.insert(w);
    }
    return report;
}

namespace detail {

inline std::string join_weights(const WeightVector& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].get_str();
    return s;
}

inline std::string hex64(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

} // namespace detail

/// Deterministic DOT text. Edge labels are dropped; nodes carry the
/// normal-form hash and, for simplices, the weights.
inline std::string export_dot(const MutationGraph& g) {
    std::ostringstream os;
    os << "digraph mutation_graph {\n";
    if (!g.nodes.empty())
        os << "  // bounds: depth=" << g.depth << " wmax=" << g.bounds.w_max << " degmax=" << g.bounds.deg_max
           << (g.partial ? " partial" : "") << "\n";
    for (const auto& n : g.nodes) {
        os << "  n" << n.id << " [label=\"" << detail::hex64(n.label.hash());
        LatticePolytope P = newton_polytope(n.polynomial);
        if (P.is_full_dimensional() && P.vertices().size() == P.rank() + 1)
            os << "\\n(" << detail::join_weights(simplex_weights(P)) << ")";
        os << "\", depth=" << n.depth << "];\n";
    }
    for (const auto& e : g.edges) os << "  n" << e.from << " -> n" << e.to << ";\n";
    os << "}\n";
    return os.str();
}

/// Number of node statements in DOT text written by export_dot.
inline std::size_t count_dot_nodes(const std::string& dot) {
    static const std::regex node_line(R"(^\s*n\d+\s*\[)");
    std::istringstream is(dot);
    std::size_t count = 0;
    for (std::string line; std::getline(is, line);)
        if (std::regex_search(line, node_line)) ++count;
    return count;
}

} // namespace mirrorkit
