#pragma once

// Mutations of Laurent polynomials: a primitive weight w grades the
// monomials, and a factor F on the hyperplane w^perp acts by
// x^v -> x^v F^{w(v)}. f is mutable when the image is again a Laurent
// polynomial, i.e. every slice at a negative level i is divisible by F^{|i|}.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mirrorkit/error.hpp"
#include "mirrorkit/laurent.hpp"
#include "mirrorkit/lattice.hpp"
#include "mirrorkit/polytope.hpp"
#include "mirrorkit/univariate.hpp"

namespace mirrorkit {

struct MutationData {
    IntVector w;              // primitive covector
    LaurentPolynomial factor; // supported on w^perp

    bool operator==(const MutationData&) const = default;
};

struct MutationWitness {
    std::map<Int, LaurentPolynomial> slices;    // level -> P_i
    std::map<Int, LaurentPolynomial> quotients; // negative level -> R_i
};

struct Mutability {
    bool mutable_ = false;
    std::optional<Int> failing_level;
    MutationWitness witness;

    explicit operator bool() const noexcept { return mutable_; }
};

/// Bounds for mutation enumeration. A weight w is a candidate when the
/// lowest level it takes on the Newton polytope is >= -w_max, so the
/// candidates are the primitive lattice points of w_max times the dual
/// polytope. deg_max bounds the degree of the factor.
struct MutationBounds {
    Int w_max = 12;
    Int deg_max = 6;
};

/// Coordinates adapted to w: the last coordinate of to_adapted * e is w(e),
/// the others are coordinates on w^perp. from_adapted is the inverse.
struct AdaptedBasis {
    IntMatrix from_adapted;
    IntMatrix to_adapted;

    explicit AdaptedBasis(const IntVector& w)
        : from_adapted(complete_to_unimodular(w)), to_adapted(inverse_unimodular(from_adapted)) {}
};

inline void require_primitive(const IntVector& w) {
    if (w.empty() || is_zero_vector(w) || !is_primitive(w))
        throw Error(ErrorKind::not_primitive, "weight must be a nonzero primitive vector");
}

inline Int level(const IntVector& w, const Exponent& e) { return dot(w, e); }

/// Sign-normalized generator of the line through w.
inline IntVector weight_line(const IntVector& w) {
    for (Int x : w) {
        if (x > 0) return w;
        if (x < 0) return negate(w);
    }
    return w;
}

inline void validate(const MutationData& m) {
    require_primitive(m.w);
    if (m.factor.rank() != m.w.size())
        throw Error(ErrorKind::rank_mismatch, "factor rank does not match weight length");
    if (m.factor.is_zero()) throw Error(ErrorKind::zero_polynomial, "mutation factor is zero");
    for (const auto& [e, c] : m.factor.terms())
        if (level(m.w, e) != 0)
            throw Error(ErrorKind::invalid_argument, "mutation factor is not supported on w-perp");
}

/// Splits f into its w-graded pieces.
inline std::map<Int, LaurentPolynomial> weight_decomposition(const LaurentPolynomial& f, const IntVector& w) {
    require_primitive(w);
    if (w.size() != f.rank()) throw Error(ErrorKind::rank_mismatch, "weight length does not match rank");
    std::map<Int, LaurentPolynomial> slices;
    for (const auto& [e, c] : f.terms()) {
        auto [it, inserted] = slices.try_emplace(level(w, e), f.rank());
        it->second.add_term(e, c);
    }
    return slices;
}

/// Exact divisibility test at every negative level, with the quotients.
inline Mutability is_mutable(const LaurentPolynomial& f, const MutationData& m) {
    validate(m);
    Mutability out;
    out.witness.slices = weight_decomposition(f, m.w);
    LaurentPolynomial fpow = LaurentPolynomial::constant(f.rank(), 1);
    Int current = 0;
    // walk negative levels from -1 downwards so F^{|i|} is built incrementally
    for (auto it = out.witness.slices.rbegin(); it != out.witness.slices.rend(); ++it) {
        Int i = it->first;
        if (i >= 0) continue;
        while (current < -i) {
            fpow *= m.factor;
            ++current;
        }
        auto q = divide_exact(it->second, fpow);
        if (!q) {
            out.failing_level = i;
            out.witness.quotients.clear();
            return out;
        }
        out.witness.quotients.emplace(i, std::move(*q));
    }
    out.mutable_ = true;
    return out;
}

/// Moves g to the canonical representative of its class under w-shears
/// e -> e + w(e) s, s in w^perp. The reference slice is the lowest level if
/// negative, otherwise the highest; its lexicographically least exponent is
/// shifted into [0, |level|) in every w^perp coordinate.
inline LaurentPolynomial canonicalize_shear(const LaurentPolynomial& g, const IntVector& w) {
    require_primitive(w);
    if (g.is_zero()) return g;
    std::size_t n = g.rank();
    AdaptedBasis basis(w);
    std::vector<std::pair<IntVector, const Rational*>> adapted;
    Int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [e, c] : g.terms()) {
        IntVector a = apply_matrix(basis.to_adapted, e);
        Int l = a[n - 1];
        lo = first ? l : std::min(lo, l);
        hi = first ? l : std::max(hi, l);
        first = false;
        adapted.emplace_back(std::move(a), &c);
    }
    Int ref = lo < 0 ? lo : hi;
    if (ref == 0) return g;
    std::optional<IntVector> least;
    for (const auto& [a, c] : adapted) {
        if (a[n - 1] != ref) continue;
        IntVector head(a.begin(), a.end() - 1);
        if (!least || head < *least) least = head;
    }
    Int span = ref < 0 ? -ref : ref;
    IntVector sigma(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Int x = (*least)[i];
        Int fl = x >= 0 ? x / span : -((-x + span - 1) / span); // floor(x / span)
        sigma[i] = ref > 0 ? -fl : fl;
    }
    LaurentPolynomial out(n);
    for (auto& [a, c] : adapted) {
        Int l = a[n - 1];
        for (std::size_t i = 0; i + 1 < n; ++i) a[i] += l * sigma[i];
        out.add_term(apply_matrix(basis.from_adapted, a), *c);
    }
    return out;
}

/// mu_(w,F)(f) without shear canonicalization.
inline LaurentPolynomial mutate_raw(const LaurentPolynomial& f, const MutationData& m) {
    Mutability test = is_mutable(f, m);
    if (!test)
        throw Error(ErrorKind::not_mutable,
                    "polynomial is not mutable: level " + std::to_string(*test.failing_level) + " is not divisible");
    LaurentPolynomial g(f.rank());
    for (auto& [i, r] : test.witness.quotients) g += r;
    LaurentPolynomial fpow = LaurentPolynomial::constant(f.rank(), 1);
    Int current = 0;
    for (const auto& [i, p] : test.witness.slices) {
        if (i < 0) continue;
        while (current < i) {
            fpow *= m.factor;
            ++current;
        }
        g += p * fpow;
    }
    return g;
}

/// mu_(w,F)(f), brought to its canonical w-shear representative.
inline LaurentPolynomial mutate(const LaurentPolynomial& f, const MutationData& m) {
    return canonicalize_shear(mutate_raw(f, m), m.w);
}

/// Translates F so that its lexicographically least exponent is the origin.
inline LaurentPolynomial canonical_factor(const LaurentPolynomial& F) {
    if (F.is_zero()) return F;
    return F.shifted(negate(F.terms().begin()->first));
}

/// Total degree of a factor: lattice length for n = 2, otherwise the
/// maximal lattice length of an edge from the least exponent.
inline Int factor_degree(const LaurentPolynomial& F) {
    if (F.size() <= 1) return 0;
    const auto& base = F.terms().begin()->first;
    Int best = 0;
    for (const auto& [e, c] : F.terms()) best = std::max(best, gcd_of(sub(e, base)));
    return best;
}

struct Mutation {
    MutationData data;
    MutationWitness witness;
    Int degree = 0;
};

struct MutationEnumeration {
    std::vector<Mutation> mutations;
    MutationBounds bounds;
    bool partial = false; // n >= 3 factor search is restricted
    std::size_t candidates_examined = 0;
};

namespace detail {

/// Candidate weights: nonzero primitive u with <u, v> >= -w_max on every vertex.
inline std::vector<IntVector> weight_candidates(const LatticePolytope& P, Int w_max) {
    std::size_t n = P.rank();
    DualPolytope d = dual_polytope(P);
    IntVector lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class mn = d.vertices[0][i], mx = d.vertices[0][i];
        for (const auto& v : d.vertices) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        mpq_class a = mn * w_max, b = mx * w_max;
        mpz_class fl, ce;
        mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
        mpz_cdiv_q(ce.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
        lo[i] = fl.get_si();
        hi[i] = ce.get_si();
    }
    std::vector<IntVector> out;
    IntVector u = lo;
    for (;;) {
        if (!is_zero_vector(u) && is_primitive(u)) {
            bool ok = std::all_of(P.vertices().begin(), P.vertices().end(),
                                  [&](const IntVector& v) { return dot(u, v) >= -w_max; });
            if (ok) out.push_back(u);
        }
        std::size_t i = 0;
        while (i < n && u[i] == hi[i]) {
            u[i] = lo[i];
            ++i;
        }
        if (i == n) break;
        ++u[i];
    }
    return out;
}

/// Candidate factors in adapted coordinates (rank n-1) with F^h dividing the
/// lowest slice. Complete for n = 2 via factorization over Z.
inline std::vector<LaurentPolynomial> univariate_factor_candidates(const LaurentPolynomial& slice, Int h,
                                                                   Int deg_max) {
    Int low = slice.terms().begin()->first[0];
    Int high = slice.terms().rbegin()->first[0];
    univariate::QPoly q(static_cast<std::size_t>(high - low + 1), 0);
    for (const auto& [e, c] : slice.terms()) q[static_cast<std::size_t>(e[0] - low)] = c;
    univariate::ZPoly z = univariate::to_primitive_z(q);
    auto fac = univariate::factor(z);
    std::vector<std::pair<const univariate::ZPoly*, int>> usable;
    for (const auto& [g, mult] : fac.factors) {
        if (univariate::degree(g) < 1 || g[0] == 0) continue; // monomial part
        int cap = static_cast<int>(mult / h);
        if (cap > 0) usable.emplace_back(&g, cap);
    }
    std::vector<LaurentPolynomial> out;
    std::vector<int> pick(usable.size(), 0);
    for (;;) {
        std::size_t i = 0;
        while (i < usable.size() && pick[i] == usable[i].second) pick[i++] = 0;
        if (i == usable.size()) break;
        ++pick[i];
        univariate::ZPoly F{1};
        for (std::size_t j = 0; j < usable.size(); ++j)
            for (int r = 0; r < pick[j]; ++r) F = univariate::multiply(F, *usable[j].first);
        if (univariate::degree(F) > deg_max) continue;
        if (F.front() != 1 || F.back() != 1) continue;
        if (std::any_of(F.begin(), F.end(), [](const mpz_class& c) { return c < 0; })) continue;
        LaurentPolynomial p(1);
        for (std::size_t k = 0; k < F.size(); ++k) p.add_term({static_cast<Int>(k)}, Rational(F[k]));
        out.push_back(std::move(p));
    }
    return out;
}

/// Restricted factor search in rank >= 2 adapted coordinates: products of
/// binomials 1 + x^u and unimodular trinomials 1 + x^a + x^b read off the
/// slice support.
inline std::vector<LaurentPolynomial> multivariate_factor_candidates(const LaurentPolynomial& slice, Int h,
                                                                     Int deg_max) {
    std::size_t r = slice.rank();
    auto support = slice.support();
    std::set<LaurentPolynomial::TermMap> seen;
    std::vector<LaurentPolynomial> atoms;
    auto consider = [&](LaurentPolynomial atom) {
        atom = canonical_factor(atom);
        if (!seen.insert(atom.terms()).second) return;
        if (divide_exact(slice, atom)) atoms.push_back(std::move(atom));
    };
    Exponent zero(r, 0);
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = i + 1; j < support.size(); ++j) {
            IntVector d = sub(support[j], support[i]);
            LaurentPolynomial full = LaurentPolynomial::monomial(zero);
            full.add_term(d, 1);
            consider(full);
            IntVector u = primitive_part(d);
            if (u != d) {
                LaurentPolynomial prim = LaurentPolynomial::monomial(zero);
                prim.add_term(u, 1);
                consider(prim);
            }
        }
    if (r >= 2) {
        for (std::size_t i = 0; i < support.size(); ++i)
            for (std::size_t j = i + 1; j < support.size(); ++j)
                for (std::size_t k = j + 1; k < support.size(); ++k) {
                    IntVector a = sub(support[j], support[i]), b = sub(support[k], support[i]);
                    Int g = 0;
                    for (std::size_t x = 0; x < r; ++x)
                        for (std::size_t y = x + 1; y < r; ++y) g = std::gcd(g, a[x] * b[y] - a[y] * b[x]);
                    if (g != 1) continue;
                    LaurentPolynomial t = LaurentPolynomial::monomial(zero);
                    t.add_term(a, 1);
                    t.add_term(b, 1);
                    consider(t);
                }
    }
    std::sort(atoms.begin(), atoms.end(), [](const auto& x, const auto& y) { return x.terms() < y.terms(); });

    std::vector<LaurentPolynomial> out;
    std::set<LaurentPolynomial::TermMap> produced;
    std::vector<std::size_t> pick;
    // multisets of atoms (non-decreasing index sequences) of size 1..deg_max
    std::function<void(std::size_t, const LaurentPolynomial&)> grow = [&](std::size_t start,
                                                                        const LaurentPolynomial& F) {
        if (static_cast<Int>(pick.size()) >= deg_max) return;
        for (std::size_t a = start; a < atoms.size(); ++a) {
            LaurentPolynomial next = canonical_factor(F * atoms[a]);
            if (!divide_exact(slice, power(next, static_cast<unsigned>(h)))) continue;
            pick.push_back(a);
            if (produced.insert(next.terms()).second) out.push_back(next);
            grow(a, next);
            pick.pop_back();
        }
    };
    grow(0, LaurentPolynomial::monomial(zero));
    return out;
}

inline std::vector<Mutation> mutations_for_weight(const LaurentPolynomial& f, const LatticePolytope& P,
                                                  const IntVector& w, const MutationBounds& bounds,
                                                  const std::vector<LaurentPolynomial>& extra_factors) {
    std::size_t n = f.rank();
    Int lowest = dot(w, P.vertices()[0]);
    std::size_t at_lowest = 0;
    for (const auto& v : P.vertices()) {
        Int l = dot(w, v);
        if (l < lowest) {
            lowest = l;
            at_lowest = 0;
        }
        if (l == lowest) ++at_lowest;
    }
    std::vector<LaurentPolynomial> factors;
    if (at_lowest >= 2) {
        Int h = -lowest;
        AdaptedBasis basis(w);
        LaurentPolynomial slice(n - 1);
        for (const auto& [e, c] : f.terms()) {
            if (dot(w, e) != lowest) continue;
            IntVector a = apply_matrix(basis.to_adapted, e);
            a.pop_back();
            slice.add_term(a, c);
        }
        std::vector<LaurentPolynomial> local =
            n == 2 ? univariate_factor_candidates(slice, h, bounds.deg_max)
                   : multivariate_factor_candidates(slice, h, bounds.deg_max);
        for (const auto& F : local) {
            LaurentPolynomial orig(n);
            for (const auto& [a, c] : F.terms()) {
                IntVector full = a;
                full.push_back(0);
                orig.add_term(apply_matrix(basis.from_adapted, full), c);
            }
            factors.push_back(canonical_factor(orig));
        }
    }
    for (const auto& F : extra_factors) {
        bool on_perp = std::all_of(F.terms().begin(), F.terms().end(),
                                   [&](const auto& t) { return dot(w, t.first) == 0; });
        if (on_perp && F.size() > 1) factors.push_back(canonical_factor(F));
    }
    std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) { return a.terms() < b.terms(); });
    factors.erase(std::unique(factors.begin(), factors.end()), factors.end());

    std::vector<Mutation> out;
    for (auto& F : factors) {
        Int deg = factor_degree(F);
        if (deg < 1 || deg > bounds.deg_max) continue;
        MutationData data{w, F};
        Mutability test = is_mutable(f, data);
        if (test) out.push_back(Mutation{std::move(data), std::move(test.witness), deg});
    }
    return out;
}

} // namespace detail

/// All (w, F) within bounds, deg F > 0, F normalised with non-negative
/// integer coefficients, such that f is mutable with respect to (w, F).
/// Complete within bounds for rank 2; restricted (flagged partial) above.
inline MutationEnumeration enumerate_mutations(const LaurentPolynomial& f, const MutationBounds& bounds,
                                               unsigned threads = 1,
                                               const std::vector<LaurentPolynomial>& extra_factors = {}) {
    if (bounds.w_max <= 0 || bounds.deg_max <= 0)
        throw Error(ErrorKind::invalid_argument, "bounds must be positive");
    LatticePolytope P = newton_polytope(f);
    if (!P.is_full_dimensional())
        throw Error(ErrorKind::degenerate_polytope, "Newton polytope is not full-dimensional");
    if (!is_fano(P).is_fano()) throw Error(ErrorKind::not_fano, "Newton polytope is not a Fano polytope");
    auto candidates = detail::weight_candidates(P, bounds.w_max);
    std::vector<std::vector<Mutation>> slots(candidates.size());
    auto work = [&](std::size_t start, std::size_t stride) {
        for (std::size_t i = start; i < candidates.size(); i += stride)
            slots[i] = detail::mutations_for_weight(f, P, candidates[i], bounds, extra_factors);
    };
    threads = std::max(1u, threads);
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
        for (auto& th : pool) th.join();
    }
    MutationEnumeration out;
    out.bounds = bounds;
    out.partial = f.rank() >= 3;
    out.candidates_examined = candidates.size();
    for (auto& s : slots)
        for (auto& m : s) out.mutations.push_back(std::move(m));
    std::sort(out.mutations.begin(), out.mutations.end(), [](const Mutation& a, const Mutation& b) {
        if (a.data.w != b.data.w) return a.data.w < b.data.w;
        return a.data.factor.terms() < b.data.factor.terms();
    });
    return out;
}

} // namespace mirrorkit
