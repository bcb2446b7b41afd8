#pragma once

// Integer vectors and matrices over Z^n: gcds, unimodular maps, Hermite
// reduction and basis completion.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mirrorkit/error.hpp"

namespace mirrorkit {

using Int = std::int64_t;
using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>; // row-major

inline Int gcd_of(std::span<const Int> v) {
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x);
    return g;
}

inline bool is_primitive(std::span<const Int> v) { return gcd_of(v) == 1; }

inline bool is_zero_vector(std::span<const Int> v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

inline Int dot(std::span<const Int> a, std::span<const Int> b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVector add(std::span<const Int> a, std::span<const Int> b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVector sub(std::span<const Int> a, std::span<const Int> b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVector scale(std::span<const Int> a, Int k) {
    IntVector r(a.begin(), a.end());
    for (Int& x : r) x *= k;
    return r;
}

inline IntVector negate(std::span<const Int> a) { return scale(a, -1); }

/// Divides out the gcd; the zero vector is returned unchanged.
inline IntVector primitive_part(std::span<const Int> v) {
    IntVector r(v.begin(), v.end());
    Int g = gcd_of(v);
    if (g > 1)
        for (Int& x : r) x /= g;
    return r;
}

inline IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntVector apply_matrix(const IntMatrix& m, std::span<const Int> v) {
    IntVector r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    std::size_t rows = a.size(), inner = b.size(),
                cols = b.empty() ? 0 : b[0].size();
    IntMatrix r(rows, IntVector(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

inline IntMatrix transpose(const IntMatrix& m) {
    if (m.empty()) return {};
    IntMatrix t(m[0].size(), IntVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

/// Exact determinant (fraction-free Bareiss elimination).
inline mpz_class determinant(const IntMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n)
            throw Error(ErrorKind::invalid_argument, "determinant of a non-square matrix");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
    }
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline bool is_unimodular(const IntMatrix& m) {
    mpz_class d = determinant(m);
    return d == 1 || d == -1;
}

/// Inverse of a unimodular matrix; throws not_unimodular otherwise.
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
    std::size_t n = m.size();
    if (!is_unimodular(m))
        throw Error(ErrorKind::not_unimodular, "matrix is not unimodular");
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (a[p][c] == 0) ++p;
        std::swap(a[c], a[p]);
        mpq_class inv = 1 / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    IntMatrix r(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = a[i][n + j].get_num().get_si();
    return r;
}

/// Unimodular V with w * V = (0, ..., 0, 1) for a primitive row vector w.
/// The first n-1 columns of V are then a basis of the orthogonal sublattice
/// w^perp, and the last row of V^{-1} is w itself.
inline IntMatrix complete_to_unimodular(std::span<const Int> w) {
    std::size_t n = w.size();
    if (n == 0 || !is_primitive(w))
        throw Error(ErrorKind::not_primitive, "weight is not primitive");
    IntVector r(w.begin(), w.end());
    IntMatrix v = identity_matrix(n);
    auto column_axpy = [&](std::size_t dst, std::size_t src, Int q) {
        for (std::size_t i = 0; i < n; ++i) v[i][dst] -= q * v[i][src];
        r[dst] -= q * r[src];
    };
    for (;;) {
        std::size_t pivot = n;
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (r[i] == 0) continue;
            ++nonzero;
            if (pivot == n || std::llabs(r[i]) < std::llabs(r[pivot])) pivot = i;
        }
        if (nonzero == 1) {
            if (pivot != n - 1) {
                for (std::size_t i = 0; i < n; ++i) std::swap(v[i][pivot], v[i][n - 1]);
                std::swap(r[pivot], r[n - 1]);
            }
            if (r[n - 1] < 0) {
                for (std::size_t i = 0; i < n; ++i) v[i][n - 1] = -v[i][n - 1];
                r[n - 1] = -r[n - 1];
            }
            return v;
        }
        for (std::size_t j = 0; j < n; ++j)
            if (j != pivot && r[j] != 0) column_axpy(j, pivot, r[j] / r[pivot]);
    }
}

/// Row-style Hermite normal form of the lattice spanned by the rows of m.
/// Returns only the nonzero rows: echelon form, positive pivots, entries
/// above each pivot reduced into [0, pivot).
inline std::vector<std::vector<mpz_class>> hermite_rows(const IntMatrix& m) {
    std::vector<std::vector<mpz_class>> a;
    for (const auto& row : m) {
        std::vector<mpz_class> r;
        for (Int x : row) r.emplace_back(static_cast<long>(x));
        a.push_back(std::move(r));
    }
    if (a.empty()) return a;
    std::size_t cols = a[0].size();
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        for (;;) {
            std::size_t pivot = a.size();
            for (std::size_t i = row; i < a.size(); ++i)
                if (a[i][c] != 0 && (pivot == a.size() || abs(a[i][c]) < abs(a[pivot][c])))
                    pivot = i;
            if (pivot == a.size()) break;
            std::swap(a[row], a[pivot]);
            bool done = true;
            for (std::size_t i = row + 1; i < a.size(); ++i) {
                if (a[i][c] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[row][c].get_mpz_t());
                for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[row][j];
                if (a[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (row < a.size() && a[row][c] != 0) {
            if (a[row][c] < 0)
                for (auto& x : a[row]) x = -x;
            for (std::size_t i = 0; i < row; ++i) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[row][c].get_mpz_t());
                for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[row][j];
            }
            ++row;
        }
    }
    a.resize(row);
    return a;
}

} // namespace mirrorkit
