#pragma once

// Exact linear algebra over Q: reduced row echelon form, nullspaces and
// affine solution sets.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mirrorkit {

using RationalVector = std::vector<mpq_class>;
using RationalMatrix = std::vector<RationalVector>;

struct Echelon {
    RationalMatrix rows;             // nonzero rows of the RREF
    std::vector<std::size_t> pivots; // pivot column of each row
};

/// Gauss-Jordan elimination; `cols` is needed when `a` has no rows.
inline Echelon rref(RationalMatrix a, std::size_t cols) {
    Echelon out;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[row], a[p]);
        if (a[row][c] != 1) {
            mpq_class inv = 1 / a[row][c];
            for (std::size_t j = c; j < cols; ++j) a[row][j] *= inv;
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (a[row][j] != 0) a[i][j] -= f * a[row][j];
        }
        out.pivots.push_back(c);
        ++row;
    }
    a.resize(row);
    out.rows = std::move(a);
    return out;
}

inline std::size_t rank(const RationalMatrix& a, std::size_t cols) {
    return rref(a, cols).pivots.size();
}

/// Basis of {x : a x = 0}, one vector per free column, in column order.
inline std::vector<RationalVector> nullspace(const RationalMatrix& a, std::size_t cols) {
    Echelon e = rref(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

struct AffineSolution {
    RationalVector point;
    std::vector<RationalVector> directions;
};

/// Solution set of a x = b, or nullopt if inconsistent.
inline std::optional<AffineSolution> solve_affine(const RationalMatrix& a,
                                                  const RationalVector& b,
                                                  std::size_t cols) {
    RationalMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Echelon e = rref(aug, cols + 1);
    for (auto p : e.pivots)
        if (p == cols) return std::nullopt;
    AffineSolution s;
    s.point.assign(cols, 0);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) s.point[e.pivots[r]] = e.rows[r][cols];
    s.directions = nullspace(a, cols);
    return s;
}

/// Reduced basis of the span of `vectors` (rows of the RREF).
inline std::vector<RationalVector> span_basis(const std::vector<RationalVector>& vectors,
                                              std::size_t cols) {
    return rref(vectors, cols).rows;
}

} // namespace mirrorkit
