#pragma once

// Lattice polytopes: exact convex hulls, Fano and reflexivity checks, polar
// duality, lattice point enumeration, GL(n,Z) normal forms and weights of
// simplices.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mirrorkit/error.hpp"
#include "mirrorkit/laurent.hpp"
#include "mirrorkit/lattice.hpp"
#include "mirrorkit/linalg.hpp"

namespace mirrorkit {

/// Supporting halfspace {v : <normal, v> >= -offset}; the normal is primitive.
struct Facet {
    IntVector normal;
    Int offset = 0;

    Int level(std::span<const Int> v) const { return dot(normal, v) + offset; }
    auto operator<=>(const Facet&) const = default;
};

namespace detail {

inline std::size_t affine_rank(const std::vector<IntVector>& points) {
    if (points.size() < 2) return 0;
    RationalMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RationalVector r;
        for (std::size_t j = 0; j < points[i].size(); ++j) r.emplace_back(points[i][j] - points[0][j]);
        diffs.push_back(std::move(r));
    }
    return rank(diffs, points[0].size());
}

/// Primitive integer normal of the hyperplane through n affinely independent
/// points, or nullopt if they are dependent.
inline std::optional<IntVector> hyperplane_normal(const std::vector<const IntVector*>& pts) {
    std::size_t n = pts[0]->size();
    RationalMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RationalVector r;
        for (std::size_t j = 0; j < n; ++j) r.emplace_back((*pts[i])[j] - (*pts[0])[j]);
        diffs.push_back(std::move(r));
    }
    auto ns = nullspace(diffs, n);
    if (ns.size() != 1) return std::nullopt;
    mpz_class l = 1;
    for (const auto& c : ns[0]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    IntVector u;
    for (const auto& c : ns[0]) u.push_back(mpz_class(c * l).get_si());
    return primitive_part(u);
}

/// Facets of the convex hull of a full-dimensional point set by exhaustive
/// enumeration of hyperplanes through n points.
inline std::vector<Facet> enumerate_facets(const std::vector<IntVector>& points) {
    std::size_t n = points[0].size();
    std::size_t m = points.size();
    std::set<Facet> found;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::vector<const IntVector*> chosen(n);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i) chosen[i] = &points[idx[i]];
        if (auto u = hyperplane_normal(chosen)) {
            Int base = dot(*u, *chosen[0]);
            bool above = true, below = true;
            for (const auto& p : points) {
                Int v = dot(*u, p) - base;
                if (v < 0) above = false;
                if (v > 0) below = false;
                if (!above && !below) break;
            }
            if (above) found.insert(Facet{*u, -base});
            if (below) found.insert(Facet{negate(*u), base});
        }
        std::size_t k = n;
        while (k > 0 && idx[k - 1] == m - n + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    return {found.begin(), found.end()};
}

/// Facets of conv(points) for a full-dimensional set. Points strictly inside
/// the hull of a few extreme points are discarded before the exhaustive pass.
inline std::vector<Facet> hull_facets(std::vector<IntVector> points) {
    std::size_t n = points[0].size();
    if (points.size() > 4 * n + 4) {
        std::set<IntVector> extreme;
        IntVector dir(n, -2);
        for (;;) {
            if (!is_zero_vector(dir)) {
                auto best = std::max_element(points.begin(), points.end(), [&](const auto& a, const auto& b) {
                    Int da = dot(dir, a), db = dot(dir, b);
                    return da != db ? da < db : a < b;
                });
                extreme.insert(*best);
            }
            std::size_t i = 0;
            while (i < n && dir[i] == 2) dir[i++] = -2;
            if (i == n) break;
            ++dir[i];
        }
        std::vector<IntVector> core(extreme.begin(), extreme.end());
        if (affine_rank(core) == n) {
            auto inner = enumerate_facets(core);
            std::vector<IntVector> kept = core;
            for (const auto& p : points) {
                if (extreme.count(p)) continue;
                bool strictly_inside = std::all_of(inner.begin(), inner.end(),
                                                   [&](const Facet& f) { return f.level(p) > 0; });
                if (!strictly_inside) kept.push_back(p);
            }
            points = std::move(kept);
        }
    }
    return enumerate_facets(points);
}

} // namespace detail

class LatticePolytope {
public:
    LatticePolytope() = default;

    /// Convex hull of a finite nonempty set of lattice points.
    static LatticePolytope hull(std::size_t rank, std::vector<IntVector> points) {
        if (points.empty()) throw Error(ErrorKind::invalid_argument, "empty point set");
        for (const auto& p : points)
            if (p.size() != rank) throw Error(ErrorKind::rank_mismatch, "point has wrong length");
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        LatticePolytope P;
        P.rank_ = rank;
        P.dimension_ = detail::affine_rank(points);
        if (P.dimension_ == rank) {
            P.facets_ = detail::hull_facets(points);
            for (const auto& p : points) {
                RationalMatrix tight;
                for (const auto& f : P.facets_)
                    if (f.level(p) == 0) tight.emplace_back(f.normal.begin(), f.normal.end());
                if (mirrorkit::rank(tight, rank) == rank) P.vertices_.push_back(p);
            }
        } else if (P.dimension_ == 0) {
            P.vertices_ = {points[0]};
        } else {
            P.vertices_ = degenerate_vertices(points, P.dimension_);
        }
        return P;
    }

    std::size_t rank() const noexcept { return rank_; }
    std::size_t dimension() const noexcept { return dimension_; }
    bool is_full_dimensional() const noexcept { return dimension_ == rank_; }
    const std::vector<IntVector>& vertices() const noexcept { return vertices_; }
    /// Empty unless full-dimensional.
    const std::vector<Facet>& facets() const noexcept { return facets_; }

    bool contains(std::span<const Int> p) const {
        require_full("membership test");
        return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return f.level(p) >= 0; });
    }

    bool operator==(const LatticePolytope& o) const {
        return rank_ == o.rank_ && vertices_ == o.vertices_;
    }

    void require_full(const char* what) const {
        if (!is_full_dimensional())
            throw Error(ErrorKind::degenerate_polytope,
                        std::string(what) + " needs a full-dimensional polytope");
    }

private:
    static std::vector<IntVector> degenerate_vertices(const std::vector<IntVector>& points, std::size_t d) {
        // Project onto d coordinates on which the affine span maps injectively.
        std::size_t n = points[0].size();
        RationalMatrix diffs;
        for (std::size_t i = 1; i < points.size(); ++i) {
            RationalVector r;
            for (std::size_t j = 0; j < n; ++j) r.emplace_back(points[i][j] - points[0][j]);
            diffs.push_back(std::move(r));
        }
        auto pivots = rref(diffs, n).pivots;
        std::vector<IntVector> projected;
        for (const auto& p : points) {
            IntVector q;
            for (auto c : pivots) q.push_back(p[c]);
            projected.push_back(std::move(q));
        }
        auto low = hull(d, projected);
        std::vector<IntVector> out;
        for (std::size_t i = 0; i < points.size(); ++i)
            if (std::binary_search(low.vertices_.begin(), low.vertices_.end(), projected[i]))
                out.push_back(points[i]);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::size_t rank_ = 0;
    std::size_t dimension_ = 0;
    std::vector<IntVector> vertices_;
    std::vector<Facet> facets_;
};

inline LatticePolytope newton_polytope(const LaurentPolynomial& f) {
    if (f.is_zero()) throw Error(ErrorKind::zero_polynomial, "zero polynomial has no Newton polytope");
    return LatticePolytope::hull(f.rank(), f.support());
}

inline LatticePolytope polytope_from_vertices(std::vector<IntVector> vertices) {
    if (vertices.empty()) throw Error(ErrorKind::invalid_argument, "empty vertex list");
    std::size_t n = vertices[0].size();
    return LatticePolytope::hull(n, std::move(vertices));
}

struct FanoReport {
    bool origin_interior = false;
    bool vertices_primitive = false;
    bool is_fano() const { return origin_interior && vertices_primitive; }
};

inline bool origin_strictly_interior(const LatticePolytope& P) {
    P.require_full("origin test");
    return std::all_of(P.facets().begin(), P.facets().end(), [](const Facet& f) { return f.offset > 0; });
}

inline FanoReport is_fano(const LatticePolytope& P) {
    P.require_full("Fano check");
    FanoReport r;
    r.origin_interior = origin_strictly_interior(P);
    r.vertices_primitive = std::all_of(P.vertices().begin(), P.vertices().end(),
                                       [](const IntVector& v) { return is_primitive(v); });
    return r;
}

struct DualPolytope {
    std::size_t rank = 0;
    std::vector<RationalVector> vertices; // sorted
    bool integral = false;

    /// The dual as a lattice polytope; requires the integral flag.
    LatticePolytope to_lattice() const {
        if (!integral) throw Error(ErrorKind::invalid_argument, "dual polytope is not integral");
        std::vector<IntVector> pts;
        for (const auto& v : vertices) {
            IntVector p;
            for (const auto& c : v) p.push_back(c.get_num().get_si());
            pts.push_back(std::move(p));
        }
        return LatticePolytope::hull(rank, std::move(pts));
    }
};

/// {u : <u, v> >= -1 for all v in P}; its vertices are the facet normals
/// divided by their offsets.
inline DualPolytope dual_polytope(const LatticePolytope& P) {
    P.require_full("duality");
    if (!origin_strictly_interior(P))
        throw Error(ErrorKind::origin_not_interior, "origin is not in the strict interior; the dual is unbounded");
    DualPolytope d;
    d.rank = P.rank();
    d.integral = true;
    for (const auto& f : P.facets()) {
        RationalVector v;
        for (Int x : f.normal) v.emplace_back(mpq_class(x, f.offset));
        for (auto& c : v) c.canonicalize();
        if (f.offset != 1) d.integral = false;
        d.vertices.push_back(std::move(v));
    }
    std::sort(d.vertices.begin(), d.vertices.end());
    return d;
}

inline bool is_reflexive(const LatticePolytope& P) { return dual_polytope(P).integral; }

struct LatticePoints {
    std::vector<IntVector> all, boundary, interior;
};

/// Bounding-box scan with exact membership tests. For a lower-dimensional
/// polytope every point counts as boundary.
inline LatticePoints lattice_points(const LatticePolytope& P) {
    std::size_t n = P.rank();
    IntVector lo = P.vertices()[0], hi = P.vertices()[0];
    for (const auto& v : P.vertices())
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    LatticePoints out;
    IntVector p = lo;
    for (;;) {
        bool inside;
        bool boundary = true;
        if (P.is_full_dimensional()) {
            inside = true;
            boundary = false;
            for (const auto& f : P.facets()) {
                Int l = f.level(p);
                if (l < 0) {
                    inside = false;
                    break;
                }
                if (l == 0) boundary = true;
            }
        } else if (P.dimension() == 0) {
            inside = p == P.vertices()[0];
        } else {
            std::vector<IntVector> with = P.vertices();
            with.push_back(p);
            inside = LatticePolytope::hull(n, with).vertices() == P.vertices();
        }
        if (inside) {
            out.all.push_back(p);
            (boundary ? out.boundary : out.interior).push_back(p);
        }
        std::size_t i = 0;
        while (i < n && p[i] == hi[i]) {
            p[i] = lo[i];
            ++i;
        }
        if (i == n) break;
        ++p[i];
    }
    return out;
}

/// Twice the area of a polygon (vertices need not be ordered).
inline Int twice_area(const LatticePolytope& P) {
    if (P.rank() != 2 || !P.is_full_dimensional())
        throw Error(ErrorKind::invalid_argument, "area is defined here for polygons only");
    // order vertices counter-clockwise around their centroid direction
    std::vector<IntVector> v = P.vertices();
    IntVector c{0, 0};
    for (const auto& p : v) c = add(c, p);
    auto half = [&](const IntVector& p) {
        Int x = p[0] * static_cast<Int>(v.size()) - c[0], y = p[1] * static_cast<Int>(v.size()) - c[1];
        return (y < 0 || (y == 0 && x < 0)) ? 1 : 0;
    };
    std::sort(v.begin(), v.end(), [&](const IntVector& a, const IntVector& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Int ax = a[0] * static_cast<Int>(v.size()) - c[0], ay = a[1] * static_cast<Int>(v.size()) - c[1];
        Int bx = b[0] * static_cast<Int>(v.size()) - c[0], by = b[1] * static_cast<Int>(v.size()) - c[1];
        return ax * by - ay * bx > 0;
    });
    Int s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        s += a[0] * b[1] - a[1] * b[0];
    }
    return s < 0 ? -s : s;
}

// ---- normal form -----------------------------------------------------------

struct NormalForm {
    /// Vertex columns of the canonical representative: the first n are in
    /// Hermite normal form, the rest sorted.
    std::vector<IntVector> columns;
    std::string bytes;
    bool certified = true;

    std::uint64_t hash() const {
        std::uint64_t h = 1469598103934665603ULL;
        for (unsigned char ch : bytes) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
        return h;
    }
    bool operator==(const NormalForm& o) const { return bytes == o.bytes; }
    bool operator<(const NormalForm& o) const { return bytes < o.bytes; }
};

namespace detail {

/// Applies the unique unimodular U making the first n columns of the n x k
/// matrix (given as columns) upper-triangular Hermite, and returns U * cols.
inline std::vector<IntVector> hermite_on_leading_block(const std::vector<IntVector>& cols, std::size_t n) {
    std::size_t k = cols.size();
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(k));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) a[i][j] = static_cast<long>(cols[j][i]);
    for (std::size_t c = 0; c < n; ++c) {
        for (;;) {
            std::size_t pivot = n;
            for (std::size_t i = c; i < n; ++i)
                if (a[i][c] != 0 && (pivot == n || abs(a[i][c]) < abs(a[pivot][c]))) pivot = i;
            std::swap(a[c], a[pivot]);
            bool done = true;
            for (std::size_t i = c + 1; i < n; ++i) {
                if (a[i][c] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[c][c].get_mpz_t());
                for (std::size_t j = 0; j < k; ++j) a[i][j] -= q * a[c][j];
                if (a[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (a[c][c] < 0)
            for (auto& x : a[c]) x = -x;
        for (std::size_t i = 0; i < c; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[c][c].get_mpz_t());
            for (std::size_t j = 0; j < k; ++j) a[i][j] -= q * a[c][j];
        }
    }
    std::vector<IntVector> out(k, IntVector(n));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) out[j][i] = a[i][j].get_si();
    return out;
}

inline std::string encode_columns(std::size_t n, const std::vector<IntVector>& cols) {
    std::string s = std::to_string(n) + ":";
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (j) s += ";";
        for (std::size_t i = 0; i < cols[j].size(); ++i) {
            if (i) s += ",";
            s += std::to_string(cols[j][i]);
        }
    }
    return s;
}

} // namespace detail

/// Largest number of ordered vertex n-tuples examined before falling back to
/// an invariant fingerprint.
inline constexpr std::uint64_t kNormalFormBudget = 4'000'000;

/// GL(n,Z) normal form. For every ordered n-tuple of linearly independent
/// vertices, the unimodular map putting that tuple into Hermite form is
/// unique; applying it to the whole vertex set and taking the
/// lexicographically least result over all tuples is canonical.
inline NormalForm normal_form(const LatticePolytope& P) {
    P.require_full("normal form");
    std::size_t n = P.rank();
    const auto& verts = P.vertices();
    std::size_t k = verts.size();
    std::uint64_t work = 1;
    for (std::size_t i = 0; i < n && work <= kNormalFormBudget; ++i) work *= k;

    NormalForm nf;
    if (work > kNormalFormBudget) {
        // Fingerprint: sorted facet offsets and lattice edge data; not certified.
        nf.certified = false;
        std::vector<Int> offsets;
        for (const auto& f : P.facets()) offsets.push_back(f.offset);
        std::sort(offsets.begin(), offsets.end());
        nf.bytes = "fp" + std::to_string(n) + ":" + std::to_string(k) + ":";
        for (Int o : offsets) nf.bytes += std::to_string(o) + ",";
        nf.bytes += ":" + std::to_string(lattice_points(P).all.size());
        return nf;
    }

    std::optional<std::vector<IntVector>> best;
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        bool distinct = true;
        for (std::size_t i = 0; i < n && distinct; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (idx[i] == idx[j]) distinct = false;
        if (distinct) {
            IntMatrix m;
            for (auto i : idx) m.push_back(verts[i]);
            if (determinant(m) != 0) {
                std::vector<IntVector> cols;
                for (auto i : idx) cols.push_back(verts[i]);
                for (std::size_t v = 0; v < k; ++v)
                    if (std::find(idx.begin(), idx.end(), v) == idx.end()) cols.push_back(verts[v]);
                auto image = detail::hermite_on_leading_block(cols, n);
                std::sort(image.begin() + static_cast<long>(n), image.end());
                if (!best || image < *best) best = std::move(image);
            }
        }
        std::size_t i = 0;
        while (i < n && idx[i] == k - 1) idx[i++] = 0;
        if (i == n) break;
        ++idx[i];
    }
    nf.columns = std::move(*best);
    nf.bytes = detail::encode_columns(n, nf.columns);
    return nf;
}

/// Primitive positive relation sum a_i v_i = 0 among the vertices of a
/// simplex with the origin in its interior, sorted ascending. These are the
/// weights of the weighted projective space of the spanning fan.
inline std::vector<mpz_class> simplex_weights(const LatticePolytope& P) {
    P.require_full("simplex weights");
    std::size_t n = P.rank();
    const auto& v = P.vertices();
    if (v.size() != n + 1) throw Error(ErrorKind::invalid_argument, "polytope is not a simplex");
    if (!origin_strictly_interior(P))
        throw Error(ErrorKind::origin_not_interior, "origin is not in the strict interior");
    std::vector<mpz_class> a;
    for (std::size_t i = 0; i <= n; ++i) {
        IntMatrix m;
        for (std::size_t j = 0; j <= n; ++j)
            if (j != i) m.push_back(v[j]);
        mpz_class d = determinant(m);
        a.push_back((i % 2 == 0) ? d : mpz_class(-d));
    }
    mpz_class g = 0;
    for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (a[0] < 0) g = -g;
    for (auto& x : a) x /= g;
    std::sort(a.begin(), a.end());
    return a;
}

} // namespace mirrorkit
