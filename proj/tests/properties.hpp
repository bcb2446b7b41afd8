#pragma once

// Property checks shared by the unit suite and the acceptance binary. Each
// returns the list of failing cases as human-readable strings.

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"

namespace props {

using namespace mirrorkit;

using Failures = std::vector<std::string>;

inline const std::vector<std::string>& golden_seeds() {
    static const std::vector<std::string> seeds{
        "x+y+1/(x*y)",
        "b+(a+1)^2/(a*b^2)",
        "x+1/x+y+1/y",
        "2*x+x*y+2*y+y/x+2/x+1/(x*y)+2/y+x/y",
    };
    return seeds;
}

inline std::vector<LatticePolytope> reflexive_fixtures() {
    return {
        polytope_from_vertices({{1, 0}, {0, 1}, {-1, -1}}),
        polytope_from_vertices({{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}),
        polytope_from_vertices({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
        polytope_from_vertices({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}),
        polytope_from_vertices({{1, 0}, {0, 1}, {-1, -2}}),
        polytope_from_vertices({{2, -1}, {-1, 2}, {-1, -1}}),
        polytope_from_vertices({{1, 0}, {0, 1}, {-1, 1}, {0, -1}}),
        polytope_from_vertices({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}),
        polytope_from_vertices({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}),
        polytope_from_vertices({{2, 0, -1}, {0, 2, -1}, {-2, -2, -1}, {0, 0, 1}}),
    };
}

inline LatticePolytope transformed(const LatticePolytope& P, const IntMatrix& m) {
    std::vector<IntVector> vs;
    for (const auto& v : P.vertices()) vs.push_back(apply_matrix(m, v));
    return polytope_from_vertices(vs);
}

/// Every enumerated mutation of every golden seed keeps the period through t^n.
inline Failures mutation_period_invariance(std::size_t n, const MutationBounds& bounds, std::size_t* checked = nullptr) {
    Failures out;
    std::size_t count = 0;
    for (const auto& text : golden_seeds()) {
        auto f = parse(text);
        auto base = classical_period(f, n);
        auto found = enumerate_mutations(f, bounds);
        if (found.mutations.empty()) out.push_back(text + ": no mutations enumerated");
        for (const auto& m : found.mutations) {
            ++count;
            auto g = mutate(f, m.data);
            auto cmp = compare_sequences(classical_period(g, n), base, n);
            if (!cmp.agree)
                out.push_back(text + " mutated by " + format(m.data.factor) + ": mismatch at t^" +
                              std::to_string(*cmp.first_mismatch));
        }
    }
    if (checked) *checked = count;
    return out;
}

/// Random unimodular substitutions keep the period of the golden seeds and
/// of random Fano polynomials.
inline Failures unimodular_period_invariance(std::size_t maps, std::uint64_t seed) {
    Failures out;
    std::mt19937_64 rng(seed);
    std::vector<LaurentPolynomial> inputs;
    for (const auto& text : golden_seeds()) inputs.push_back(parse(text));
    inputs.push_back(parse("x+y+z+1/(x*y*z)"));
    for (std::size_t i = 0; i < maps; ++i) {
        const auto& f = inputs[i % inputs.size()];
        auto m = oracle::random_unimodular(f.rank(), rng);
        auto g = substitute_unimodular(f, m);
        std::size_t n = f.rank() == 2 ? 10 : 6;
        if (classical_period(g, n) != classical_period(f, n))
            out.push_back(format(f) + " under map #" + std::to_string(i));
    }
    return out;
}

inline Failures dual_of_dual() {
    Failures out;
    auto fixtures = reflexive_fixtures();
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        const auto& P = fixtures[i];
        auto D = dual_polytope(P);
        if (!D.integral) {
            out.push_back("fixture " + std::to_string(i) + " is not reflexive");
            continue;
        }
        auto DD = dual_polytope(D.to_lattice());
        if (!DD.integral || !(DD.to_lattice() == P)) out.push_back("fixture " + std::to_string(i) + ": dual of dual differs");
    }
    return out;
}

/// Pick's theorem and brute-force point counts on every 2D fixture and on
/// random polygons.
inline Failures pick(std::size_t random_polygons, std::uint64_t seed) {
    Failures out;
    std::vector<LatticePolytope> polys;
    for (const auto& P : reflexive_fixtures())
        if (P.rank() == 2) polys.push_back(P);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Int> c(-6, 6);
    while (polys.size() < random_polygons) {
        std::vector<IntVector> pts;
        for (int k = 0; k < 6; ++k) pts.push_back({c(rng), c(rng)});
        auto P = polytope_from_vertices(pts);
        if (P.is_full_dimensional()) polys.push_back(P);
    }
    for (const auto& P : polys) {
        auto pts = lattice_points(P);
        Int a2 = twice_area(P);
        Int lhs = a2, rhs = 2 * static_cast<Int>(pts.interior.size()) + static_cast<Int>(pts.boundary.size()) - 2;
        auto brute = oracle::count_polygon_points(P.vertices());
        if (lhs != rhs || a2 != oracle::shoelace2(P.vertices()) || brute.interior != pts.interior.size() ||
            brute.boundary != pts.boundary.size())
            out.push_back("polygon " + to_json(P).dump());
    }
    return out;
}

inline Failures normal_form_invariance(std::size_t maps, std::uint64_t seed) {
    Failures out;
    std::mt19937_64 rng(seed);
    auto fixtures = reflexive_fixtures();
    std::vector<NormalForm> forms;
    for (const auto& P : fixtures) forms.push_back(normal_form(P));
    for (std::size_t i = 0; i < maps; ++i) {
        std::size_t k = i % fixtures.size();
        auto m = oracle::random_unimodular(fixtures[k].rank(), rng);
        if (!(normal_form(transformed(fixtures[k], m)) == forms[k]))
            out.push_back("fixture " + std::to_string(k) + " under map #" + std::to_string(i));
    }
    return out;
}

} // namespace props
