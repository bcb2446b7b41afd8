#pragma once

// Sparse Laurent polynomials in n variables with exact rational
// coefficients.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mirrorkit/error.hpp"
#include "mirrorkit/lattice.hpp"

namespace mirrorkit {

using Exponent = IntVector;
using Rational = mpq_class;

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (Int x : e) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

class LaurentPolynomial {
public:
    using TermMap = std::map<Exponent, Rational>;

    explicit LaurentPolynomial(std::size_t rank = 0) : rank_(rank) {}

    static LaurentPolynomial constant(std::size_t rank, const Rational& c) {
        LaurentPolynomial p(rank);
        p.add_term(Exponent(rank, 0), c);
        return p;
    }

    static LaurentPolynomial monomial(const Exponent& e, const Rational& c = 1) {
        LaurentPolynomial p(e.size());
        p.add_term(e, c);
        return p;
    }

    /// Adds c * x^e, merging with an existing term and dropping zeros.
    void add_term(const Exponent& e, const Rational& c) {
        check_rank(e);
        if (c == 0) return;
        Rational v = c;
        v.canonicalize();
        auto [it, inserted] = terms_.try_emplace(e, std::move(v));
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::size_t rank() const noexcept { return rank_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Exponent& e) const {
        check_rank(e);
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(Exponent(rank_, 0)); }

    std::vector<Exponent> support() const {
        std::vector<Exponent> s;
        s.reserve(terms_.size());
        for (const auto& [e, c] : terms_) s.push_back(e);
        return s;
    }

    bool has_integer_coefficients() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const auto& t) { return t.second.get_den() == 1; });
    }

    bool operator==(const LaurentPolynomial& o) const {
        return rank_ == o.rank_ && terms_ == o.terms_;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        check_same_rank(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
        check_same_rank(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    LaurentPolynomial& operator*=(const Rational& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        Rational m = k;
        m.canonicalize();
        for (auto& [e, c] : terms_) c *= m;
        return *this;
    }

    /// Multiplies by the monomial x^shift.
    LaurentPolynomial shifted(const Exponent& shift) const {
        check_rank(shift);
        LaurentPolynomial r(rank_);
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), add(e, shift), c);
        return r;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        return a += b;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        return a -= b;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& k) { return a *= k; }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        a.check_same_rank(b);
        if (a.is_zero() || b.is_zero()) return LaurentPolynomial(a.rank_);
        const auto& small = a.size() <= b.size() ? a : b;
        const auto& large = a.size() <= b.size() ? b : a;
        std::unordered_map<Exponent, Rational, ExponentHash> acc;
        acc.reserve(small.size() * large.size());
        Exponent e(a.rank_);
        Rational prod;
        for (const auto& [es, cs] : small.terms_) {
            for (const auto& [el, cl] : large.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = es[i] + el[i];
                mpq_mul(prod.get_mpq_t(), cs.get_mpq_t(), cl.get_mpq_t());
                auto [it, inserted] = acc.try_emplace(e, prod);
                if (!inserted) it->second += prod;
            }
        }
        LaurentPolynomial r(a.rank_);
        for (auto& [k, c] : acc)
            if (c != 0) r.terms_.emplace(k, std::move(c));
        return r;
    }

    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

private:
    void check_rank(const Exponent& e) const {
        if (e.size() != rank_)
            throw Error(ErrorKind::rank_mismatch, "exponent length does not match polynomial rank");
    }
    void check_same_rank(const LaurentPolynomial& o) const {
        if (o.rank_ != rank_)
            throw Error(ErrorKind::rank_mismatch, "polynomials have different ranks");
    }

    std::size_t rank_;
    TermMap terms_;
};

enum class ArithOp { add, sub, mul };

inline LaurentPolynomial arith(const LaurentPolynomial& f, const LaurentPolynomial& g, ArithOp op) {
    switch (op) {
    case ArithOp::add: return f + g;
    case ArithOp::sub: return f - g;
    case ArithOp::mul: return f * g;
    }
    return f;
}

/// f^k by iterated multiplication; f^0 = 1.
inline LaurentPolynomial power(const LaurentPolynomial& f, unsigned k) {
    LaurentPolynomial r = LaurentPolynomial::constant(f.rank(), 1);
    for (unsigned i = 0; i < k; ++i) r *= f;
    return r;
}

inline Rational coefficient(const LaurentPolynomial& f, const Exponent& e) {
    return f.coefficient(e);
}

/// Replaces each exponent e by M e; M must be unimodular.
inline LaurentPolynomial substitute_unimodular(const LaurentPolynomial& f, const IntMatrix& m) {
    if (m.size() != f.rank())
        throw Error(ErrorKind::rank_mismatch, "matrix size does not match polynomial rank");
    if (!is_unimodular(m))
        throw Error(ErrorKind::not_unimodular, "substitution matrix is not unimodular");
    LaurentPolynomial r(f.rank());
    for (const auto& [e, c] : f.terms()) r.add_term(apply_matrix(m, e), c);
    return r;
}

struct LatticeIndex {
    std::size_t rank = 0;
    std::optional<mpz_class> index; // nullopt when the sublattice is not full rank
};

/// Rank and index of the sublattice generated by the exponents of f.
inline LatticeIndex exponent_lattice_index(const LaurentPolynomial& f) {
    if (f.is_zero()) throw Error(ErrorKind::zero_polynomial, "zero polynomial has no exponents");
    auto h = hermite_rows(f.support());
    LatticeIndex out;
    out.rank = h.size();
    if (out.rank == f.rank()) {
        mpz_class idx = 1;
        for (std::size_t i = 0; i < h.size(); ++i) idx *= h[i][i];
        out.index = abs(idx);
    }
    return out;
}

/// Exact quotient a / b in the Laurent ring, or nullopt if b does not divide a.
///
/// Long division on the lexicographic order, which is a group order on Z^n.
/// Every quotient exponent is confined to the box
/// [min(a) - min(b), max(a) - max(b)] coordinatewise, so the loop terminates.
inline std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a,
                                                     const LaurentPolynomial& b) {
    if (a.rank() != b.rank())
        throw Error(ErrorKind::rank_mismatch, "polynomials have different ranks");
    if (b.is_zero()) throw Error(ErrorKind::zero_polynomial, "division by zero polynomial");
    std::size_t n = a.rank();
    LaurentPolynomial q(n);
    if (a.is_zero()) return q;
    auto bounds = [n](const LaurentPolynomial& p) {
        IntVector lo(n), hi(n);
        bool first = true;
        for (const auto& [e, c] : p.terms()) {
            for (std::size_t i = 0; i < n; ++i) {
                lo[i] = first ? e[i] : std::min(lo[i], e[i]);
                hi[i] = first ? e[i] : std::max(hi[i], e[i]);
            }
            first = false;
        }
        return std::pair{lo, hi};
    };
    auto [alo, ahi] = bounds(a);
    auto [blo, bhi] = bounds(b);
    IntVector qlo = sub(alo, blo), qhi = sub(ahi, bhi);
    for (std::size_t i = 0; i < n; ++i)
        if (qlo[i] > qhi[i]) return std::nullopt;

    const auto& [blead_e, blead_c] = *b.terms().rbegin();
    LaurentPolynomial rem = a;
    while (!rem.is_zero()) {
        const auto& [lead_e, lead_c] = *rem.terms().rbegin();
        Exponent qe = sub(lead_e, blead_e);
        for (std::size_t i = 0; i < n; ++i)
            if (qe[i] < qlo[i] || qe[i] > qhi[i]) return std::nullopt;
        Rational qc = lead_c / blead_c;
        q.add_term(qe, qc);
        LaurentPolynomial step(n);
        for (const auto& [e, c] : b.terms()) step.add_term(add(e, qe), c * qc);
        rem -= step;
    }
    return q;
}

} // namespace mirrorkit
