#pragma once

// Polynomial-coefficient recurrences for period sequences and the matching
// differential operators in t and D = t d/dt.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mirrorkit/error.hpp"
#include "mirrorkit/linalg.hpp"
#include "mirrorkit/period.hpp"
#include "mirrorkit/univariate.hpp"

namespace mirrorkit {

/// sum_{j=0}^{r} q_j(k) c_{k-j} = 0, each q_j a polynomial in k of degree <= d
/// stored from the constant coefficient upwards.
struct PolynomialRecurrence {
    std::size_t order = 0;
    std::size_t degree = 0;
    std::vector<RationalVector> q;
    // Indices k < order where the relation fails when c_{<0} is read as 0.
    // Known when the recurrence was fitted; otherwise only k >= order is checked.
    std::optional<std::vector<std::size_t>> initial_defects;

    bool operator==(const PolynomialRecurrence& o) const { return order == o.order && degree == o.degree && q == o.q; }
};

namespace detail {

inline mpq_class evaluate(const RationalVector& p, const mpq_class& k) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * k + *it;
    return acc;
}

/// Left-hand side of the relation at index k, reading c_{<0} as 0.
inline mpq_class residual(const PolynomialRecurrence& rec, const PeriodSequence& c, std::size_t k) {
    mpq_class sum = 0;
    for (std::size_t j = 0; j <= rec.order && j <= k; ++j) sum += evaluate(rec.q[j], mpq_class(k)) * c[k - j];
    return sum;
}

/// Scales to integer coefficients with content 1 and q_0's leading coefficient positive.
inline void normalize(std::vector<RationalVector>& q) {
    mpz_class den = 1, num = 0;
    for (const auto& p : q)
        for (const auto& x : p) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
        }
    if (num == 0) return;
    mpq_class s(den, num);
    s.canonicalize();
    const RationalVector& q0 = q[0];
    auto lead = std::find_if(q0.rbegin(), q0.rend(), [](const mpq_class& x) { return x != 0; });
    if (lead != q0.rend() && *lead < 0) s = -s;
    for (auto& p : q)
        for (auto& x : p) x *= s;
}

inline std::size_t fit_margin(std::size_t r_max) { return r_max + 5; }

} // namespace detail

inline std::size_t required_terms(std::size_t r_max, std::size_t d_max) {
    return (r_max + 1) * (d_max + 1) + detail::fit_margin(r_max);
}

struct RecurrenceCheck {
    bool ok = true;
    std::optional<std::size_t> first_failure;
};

/// Exact check at every index >= order, and below order except at the
/// recorded initial defects (when those are known).
inline RecurrenceCheck verify_recurrence(const PolynomialRecurrence& rec, const PeriodSequence& terms) {
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k < rec.order) {
            if (!rec.initial_defects) continue;
            const auto& d = *rec.initial_defects;
            if (std::find(d.begin(), d.end(), k) != d.end()) continue;
        }
        if (detail::residual(rec, terms, k) != 0) return {false, k};
    }
    return {};
}

/// Solves for a recurrence of exactly order r and degree d on the window
/// k in [r, window_end) and checks it on the whole sequence.
inline std::optional<PolynomialRecurrence> try_recurrence(const PeriodSequence& terms, std::size_t r,
                                                          std::size_t d, std::size_t window_end) {
    std::size_t unknowns = (r + 1) * (d + 1);
    RationalMatrix a;
    for (std::size_t k = r; k < window_end && k < terms.size(); ++k) {
        RationalVector row(unknowns, 0);
        mpq_class kk(k);
        for (std::size_t j = 0; j <= r; ++j) {
            mpq_class pw = 1;
            for (std::size_t l = 0; l <= d; ++l) {
                row[j * (d + 1) + l] = pw * terms[k - j];
                pw *= kk;
            }
        }
        a.push_back(std::move(row));
    }
    for (const auto& v : nullspace(a, unknowns)) {
        PolynomialRecurrence rec;
        rec.order = r;
        rec.degree = d;
        for (std::size_t j = 0; j <= r; ++j)
            rec.q.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(j * (d + 1)),
                               v.begin() + static_cast<std::ptrdiff_t>((j + 1) * (d + 1)));
        if (std::all_of(rec.q[0].begin(), rec.q[0].end(), [](const mpq_class& x) { return x == 0; })) continue;
        detail::normalize(rec.q);
        bool holds = true;
        for (std::size_t k = r; k < terms.size() && holds; ++k) holds = detail::residual(rec, terms, k) == 0;
        if (!holds) continue;
        std::vector<std::size_t> defects;
        for (std::size_t k = 0; k < r && k < terms.size(); ++k)
            if (detail::residual(rec, terms, k) != 0) defects.push_back(k);
        rec.initial_defects = std::move(defects);
        return rec;
    }
    return std::nullopt;
}

/// First recurrence in graded order (r + d, then r) that fits the window and
/// survives the verification margin of r_max + 5 trailing terms.
inline std::optional<PolynomialRecurrence> fit_recurrence(const PeriodSequence& terms, std::size_t r_max,
                                                          std::size_t d_max) {
    std::size_t need = required_terms(r_max, d_max);
    if (terms.size() < need)
        throw Error(ErrorKind::insufficient_terms, "recurrence fitting needs at least " + std::to_string(need) +
                                                       " terms, got " + std::to_string(terms.size()));
    std::size_t window_end = terms.size() - detail::fit_margin(r_max);
    for (std::size_t s = 0; s <= r_max + d_max; ++s)
        for (std::size_t r = 0; r <= std::min(s, r_max); ++r) {
            std::size_t d = s - r;
            if (d > d_max) continue;
            if (auto rec = try_recurrence(terms, r, d, window_end)) return rec;
        }
    return std::nullopt;
}

/// sum a_{j,m} t^j D^m, keyed by (j, m).
struct DifferentialOperator {
    std::map<std::pair<std::size_t, std::size_t>, Rational> coefficients;

    bool operator==(const DifferentialOperator&) const = default;

    /// The polynomial in D multiplying t^j, from the constant coefficient up.
    RationalVector coefficient_of_t(std::size_t j) const {
        RationalVector p;
        for (const auto& [key, c] : coefficients) {
            if (key.first != j) continue;
            if (p.size() <= key.second) p.resize(key.second + 1, 0);
            p[key.second] = c;
        }
        return p;
    }

    std::size_t t_degree() const {
        std::size_t m = 0;
        for (const auto& [key, c] : coefficients) m = std::max(m, key.first);
        return m;
    }
};

namespace detail {

inline RationalVector poly_mul(const RationalVector& a, const RationalVector& b) {
    if (a.empty() || b.empty()) return {};
    RationalVector r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

/// p(x + s) by Horner's rule.
inline RationalVector poly_shift(const RationalVector& p, const mpq_class& s) {
    if (p.empty()) return {};
    RationalVector r{p.back()};
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        r = poly_mul(r, RationalVector{s, 1});
        r[0] += p[i];
    }
    return r;
}

inline void trim(RationalVector& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

} // namespace detail

/// L = prod_{k in defects} (D - k) * sum_j t^j q_j(D + j). The coefficient of
/// t^K in L(sum c_k t^k) is prod (K - k) times the relation at K.
inline DifferentialOperator to_differential_operator(const PolynomialRecurrence& rec) {
    if (rec.q.empty() ||
        std::all_of(rec.q[0].begin(), rec.q[0].end(), [](const mpq_class& x) { return x == 0; }))
        throw Error(ErrorKind::invalid_argument, "recurrence with q_0 = 0");
    RationalVector defect_poly{1};
    if (rec.initial_defects)
        for (std::size_t k : *rec.initial_defects)
            defect_poly = detail::poly_mul(defect_poly, RationalVector{-mpq_class(k), 1});
    DifferentialOperator L;
    for (std::size_t j = 0; j < rec.q.size(); ++j) {
        // (D - k) t^j = t^j (D + j - k), so the prefactor shifts by j as well
        RationalVector p = detail::poly_mul(detail::poly_shift(defect_poly, mpq_class(j)),
                                            detail::poly_shift(rec.q[j], mpq_class(j)));
        for (std::size_t m = 0; m < p.size(); ++m)
            if (p[m] != 0) L.coefficients[{j, m}] = p[m];
    }
    return L;
}

/// Coefficients of t^0..t^{n-1} of L applied to sum c_k t^k.
inline PeriodSequence apply_operator(const DifferentialOperator& L, const PeriodSequence& c) {
    PeriodSequence out(c.size(), 0);
    for (const auto& [key, a] : L.coefficients) {
        auto [j, m] = key;
        for (std::size_t k = 0; k + j < c.size(); ++k) {
            mpq_class km = 1;
            for (std::size_t i = 0; i < m; ++i) km *= static_cast<unsigned long>(k);
            out[k + j] += a * km * c[k];
        }
    }
    return out;
}

/// Reads the recurrence back off an operator, dropping common factors
/// (k - i), 0 <= i < order, that come from initial defects.
inline PolynomialRecurrence recurrence_from_operator(const DifferentialOperator& L) {
    PolynomialRecurrence rec;
    rec.order = L.t_degree();
    for (std::size_t j = 0; j <= rec.order; ++j) {
        RationalVector p = detail::poly_shift(L.coefficient_of_t(j), -mpq_class(j));
        detail::trim(p);
        rec.q.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < rec.order; ++i) {
        for (;;) {
            bool all_divisible = std::all_of(rec.q.begin(), rec.q.end(), [&](const RationalVector& p) {
                return p.empty() || detail::evaluate(p, mpq_class(i)) == 0;
            });
            if (!all_divisible) break;
            for (auto& p : rec.q) {
                if (p.empty()) continue;
                // synthetic division by (k - i)
                RationalVector quotient(p.size() - 1);
                mpq_class carry = 0;
                for (std::size_t m = p.size(); m-- > 1;) {
                    carry = p[m] + carry * i;
                    quotient[m - 1] = carry;
                }
                p = std::move(quotient);
            }
        }
    }
    rec.degree = 0;
    for (const auto& p : rec.q)
        if (!p.empty()) rec.degree = std::max(rec.degree, p.size() - 1);
    for (auto& p : rec.q) p.resize(rec.degree + 1, 0);
    detail::normalize(rec.q);
    return rec;
}

namespace detail {

inline std::string format_d_factor(const univariate::ZPoly& g) {
    std::string s;
    for (std::size_t m = g.size(); m-- > 0;) {
        if (g[m] == 0) continue;
        mpz_class mag = abs(g[m]);
        if (!s.empty()) s += g[m] < 0 ? "-" : "+";
        else if (g[m] < 0) s += "-";
        std::string mono = m == 0 ? "" : (m == 1 ? "D" : "D^" + std::to_string(m));
        if (mono.empty()) s += mag.get_str();
        else s += (mag == 1 ? "" : mag.get_str() + "*") + mono;
    }
    return s;
}

} // namespace detail

/// Text form with each polynomial in D factored over Z, for example
/// "D^2 - 27*t^3*(D+1)*(D+2)".
inline std::string to_string(const DifferentialOperator& L) {
    std::string out;
    for (std::size_t j = 0; j <= L.t_degree(); ++j) {
        RationalVector p = L.coefficient_of_t(j);
        detail::trim(p);
        if (p.empty()) continue;
        univariate::QPoly qp(p.begin(), p.end());
        univariate::ZPoly z = univariate::to_primitive_z(qp);
        // p = scale * z with z primitive, leading coefficient positive
        auto fac = univariate::factor(z);
        mpq_class scale = p.back() / mpq_class(z.back()) * fac.unit;
        std::vector<std::string> pieces;
        mpq_class mag = abs(scale);
        if (mag != 1 || (j == 0 && univariate::degree(z) == 0)) pieces.push_back(mag.get_str());
        if (j == 1) pieces.push_back("t");
        else if (j > 1) pieces.push_back("t^" + std::to_string(j));
        for (const auto& [g, mult] : fac.factors) {
            std::string body = detail::format_d_factor(g);
            if (g == univariate::ZPoly{0, 1}) {
                pieces.push_back(mult == 1 ? "D" : "D^" + std::to_string(mult));
                continue;
            }
            pieces.push_back("(" + body + ")" + (mult == 1 ? "" : "^" + std::to_string(mult)));
        }
        std::string term;
        for (std::size_t i = 0; i < pieces.size(); ++i) term += (i ? "*" : "") + pieces[i];
        if (out.empty()) out = (scale < 0 ? "-" : "") + term;
        else out += (scale < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

} // namespace mirrorkit
