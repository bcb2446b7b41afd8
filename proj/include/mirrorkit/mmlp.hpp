#pragma once

// Maximally mutable Laurent polynomials: seed sets, the affine space of
// coefficient choices compatible with a seed set, and the rigidity test.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mirrorkit/error.hpp"
#include "mirrorkit/laurent.hpp"
#include "mirrorkit/linalg.hpp"
#include "mirrorkit/mutation.hpp"
#include "mirrorkit/polytope.hpp"

namespace mirrorkit {

struct SeedSet {
    std::vector<MutationData> seeds;
    MutationBounds bounds;
    bool partial = false;       // restricted factor search (rank >= 3)
    bool bound_limited = false; // the result may change with larger bounds
};

/// True when every vertex of Newt(f) carries coefficient 1.
inline bool is_normalised(const LaurentPolynomial& f) {
    LatticePolytope P = newton_polytope(f);
    return std::all_of(P.vertices().begin(), P.vertices().end(),
                       [&](const IntVector& v) { return f.coefficient(v) == 1; });
}

namespace detail {

inline LatticePolytope require_fano(const LaurentPolynomial& f) {
    LatticePolytope P = newton_polytope(f);
    if (!P.is_full_dimensional() || !is_fano(P).is_fano())
        throw Error(ErrorKind::not_fano, "Newton polytope is not a Fano polytope");
    return P;
}

inline void require_mmlp_input(const LaurentPolynomial& f) {
    require_fano(f);
    if (!is_normalised(f)) throw Error(ErrorKind::not_normalised, "vertex coefficients must all be 1");
    if (f.constant_term() != 0) throw Error(ErrorKind::nonzero_constant_term, "constant term must be zero");
}

} // namespace detail

/// Every (w, F) within bounds that f is mutable with respect to. An empty
/// set or a restricted search is flagged as bound-limited.
inline SeedSet seed_set(const LaurentPolynomial& f, const MutationBounds& bounds, unsigned threads = 1) {
    detail::require_mmlp_input(f);
    auto found = enumerate_mutations(f, bounds, threads);
    SeedSet s;
    s.bounds = bounds;
    s.partial = found.partial;
    for (auto& m : found.mutations) s.seeds.push_back(std::move(m.data));
    s.bound_limited = s.seeds.empty() || s.partial;
    return s;
}

/// Affine space of coefficient vectors on the free lattice points of P.
/// Vertices are fixed to 1 and the origin to 0.
struct CoefficientSpace {
    std::size_t rank = 0;
    std::vector<IntVector> vertices;
    std::vector<IntVector> coordinates; // free lattice points, sorted
    bool feasible = true;
    RationalVector basepoint;
    std::vector<RationalVector> directions;

    std::size_t dimension() const { return feasible ? directions.size() : 0; }

    /// The polynomial with the given values on the free coordinates.
    LaurentPolynomial polynomial_at(const RationalVector& values) const {
        if (values.size() != coordinates.size())
            throw Error(ErrorKind::invalid_argument, "coefficient vector has the wrong length");
        LaurentPolynomial f(rank);
        for (const auto& v : vertices) f.add_term(v, 1);
        for (std::size_t i = 0; i < coordinates.size(); ++i) f.add_term(coordinates[i], values[i]);
        return f;
    }

    /// basepoint + sum t_i directions_i
    RationalVector point(const RationalVector& t) const {
        RationalVector p = basepoint;
        for (std::size_t i = 0; i < directions.size() && i < t.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j) p[j] += t[i] * directions[i][j];
        return p;
    }

    bool contains(const LaurentPolynomial& f) const {
        if (!feasible || f.rank() != rank) return false;
        for (const auto& v : vertices)
            if (f.coefficient(v) != 1) return false;
        std::map<IntVector, std::size_t> index;
        for (std::size_t i = 0; i < coordinates.size(); ++i) index.emplace(coordinates[i], i);
        RationalVector target(coordinates.size(), 0);
        for (const auto& [e, c] : f.terms()) {
            auto it = index.find(e);
            if (it != index.end()) target[it->second] = c;
            else if (std::find(vertices.begin(), vertices.end(), e) == vertices.end())
                return false; // outside P, or a nonzero constant term
        }
        // target - basepoint must lie in the span of the directions
        RationalMatrix rows = directions;
        std::size_t before = mirrorkit::rank(rows, coordinates.size());
        RationalVector diff(coordinates.size());
        for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = target[j] - basepoint[j];
        rows.push_back(diff);
        return mirrorkit::rank(rows, coordinates.size()) == before;
    }
};

/// L_P(S): coefficient choices on P with every seed's negative slices
/// divisible by the matching power of F with quotient supported inside P.
inline CoefficientSpace coefficient_space(const LatticePolytope& P, const SeedSet& S) {
    if (!P.is_full_dimensional() || !is_fano(P).is_fano())
        throw Error(ErrorKind::not_fano, "coefficient space needs a Fano polytope");
    std::size_t n = P.rank();
    CoefficientSpace space;
    space.rank = n;
    space.vertices = P.vertices();
    IntVector origin(n, 0);
    LatticePoints pts = lattice_points(P);
    std::map<IntVector, std::size_t> index;
    for (const auto& p : pts.all) {
        if (p == origin || std::binary_search(space.vertices.begin(), space.vertices.end(), p)) continue;
        index.emplace(p, space.coordinates.size());
        space.coordinates.push_back(p);
    }
    std::size_t m = space.coordinates.size();

    // Each equation is sparse: column -> coefficient, plus a right-hand side.
    struct Equation {
        std::map<std::size_t, mpq_class> lhs;
        mpq_class rhs = 0;
    };
    std::vector<Equation> equations;
    std::size_t columns = m;
    for (const auto& seed : S.seeds) {
        validate(seed);
        if (seed.w.size() != n) throw Error(ErrorKind::rank_mismatch, "seed weight rank does not match P");
        std::map<Int, std::vector<IntVector>> levels;
        for (const auto& p : pts.all) {
            Int l = dot(seed.w, p);
            if (l < 0) levels[l].push_back(p);
        }
        LaurentPolynomial G = LaurentPolynomial::constant(n, 1);
        Int current = 0;
        for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
            auto& [l, slice] = *it;
            while (current < -l) {
                G *= seed.factor;
                ++current;
            }
            std::sort(slice.begin(), slice.end());
            const IntVector& anchor = G.terms().begin()->first;
            std::map<IntVector, std::size_t> shift_column;
            for (const auto& p : slice) {
                IntVector r = sub(p, anchor);
                bool fits = std::all_of(G.terms().begin(), G.terms().end(), [&](const auto& t) {
                    return std::binary_search(slice.begin(), slice.end(), add(r, t.first));
                });
                if (fits) shift_column.emplace(r, columns++);
            }
            for (const auto& p : slice) {
                Equation eq;
                if (auto it2 = index.find(p); it2 != index.end()) eq.lhs[it2->second] = 1;
                else eq.rhs = -1; // a vertex, fixed to 1
                for (const auto& [r, col] : shift_column) {
                    IntVector q = sub(p, r);
                    auto t = G.terms().find(q);
                    if (t != G.terms().end()) eq.lhs[col] -= t->second;
                }
                equations.push_back(std::move(eq));
            }
        }
    }

    RationalMatrix a;
    RationalVector b;
    for (const auto& eq : equations) {
        RationalVector row(columns, 0);
        for (const auto& [c, v] : eq.lhs) row[c] = v;
        a.push_back(std::move(row));
        b.push_back(eq.rhs);
    }
    if (a.empty()) {
        space.basepoint.assign(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            RationalVector d(m, 0);
            d[i] = 1;
            space.directions.push_back(std::move(d));
        }
        return space;
    }
    auto solution = solve_affine(a, b, columns);
    if (!solution) {
        space.feasible = false;
        return space;
    }
    space.basepoint.assign(solution->point.begin(), solution->point.begin() + static_cast<std::ptrdiff_t>(m));
    std::vector<RationalVector> projected;
    for (const auto& d : solution->directions) {
        RationalVector v(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(m));
        if (std::any_of(v.begin(), v.end(), [](const mpq_class& x) { return x != 0; })) projected.push_back(v);
    }
    space.directions = m == 0 ? std::vector<RationalVector>{} : span_basis(projected, m);
    return space;
}

enum class RigidityStatus { rigid_within_bounds, not_rigid, inconclusive };

inline std::string to_string(RigidityStatus s) {
    switch (s) {
    case RigidityStatus::rigid_within_bounds: return "rigid-within-bounds";
    case RigidityStatus::not_rigid: return "not-rigid";
    case RigidityStatus::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

struct RigidityVerdict {
    RigidityStatus status = RigidityStatus::inconclusive;
    std::size_t dimension = 0;
    MutationBounds bounds;
    SeedSet seeds;
    std::optional<LaurentPolynomial> witness; // the unique point when the space is a point
    bool nonnegative_integral = false;        // checked on the witness only
};

/// Rigidity as L_{Newt f}(S_f) = {f}, with S_f computed within bounds.
/// Exponents of f must generate the whole lattice.
inline RigidityVerdict is_rigid(const LaurentPolynomial& f, const MutationBounds& bounds, unsigned threads = 1) {
    detail::require_mmlp_input(f);
    LatticeIndex idx = exponent_lattice_index(f);
    if (!idx.index || *idx.index != 1)
        throw Error(ErrorKind::lattice_index,
                    "exponents generate a sublattice of index " + (idx.index ? idx.index->get_str() : "infinity"));
    RigidityVerdict v;
    v.bounds = bounds;
    v.seeds = seed_set(f, bounds, threads);
    CoefficientSpace space = coefficient_space(newton_polytope(f), v.seeds);
    v.dimension = space.dimension();
    if (space.feasible && space.dimension() == 0) {
        LaurentPolynomial point = space.polynomial_at(space.basepoint);
        v.nonnegative_integral = std::all_of(point.terms().begin(), point.terms().end(), [](const auto& t) {
            return t.second >= 0 && t.second.get_den() == 1;
        });
        bool is_f = point == f;
        v.witness = std::move(point);
        if (is_f) {
            v.status = RigidityStatus::rigid_within_bounds;
            return v;
        }
    }
    v.status = v.seeds.bound_limited ? RigidityStatus::inconclusive : RigidityStatus::not_rigid;
    return v;
}

} // namespace mirrorkit
