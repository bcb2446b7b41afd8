#pragma once

// Dense univariate polynomials over Z, Q and Z/p, and complete factorization
// over Z (squarefree decomposition, Cantor-Zassenhaus modulo a small prime,
// quadratic Hensel lifting, Zassenhaus recombination).

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mirrorkit/error.hpp"

namespace mirrorkit::univariate {

/// Coefficients from the constant term upwards; no trailing zeros.
using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

template <class P>
P trimmed(P p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

template <class P>
long degree(const P& p) {
    return static_cast<long>(p.size()) - 1;
}

inline mpz_class content(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

/// Divides by the content and makes the leading coefficient positive.
inline ZPoly primitive_part(ZPoly p) {
    p = trimmed(std::move(p));
    if (p.empty()) return p;
    mpz_class g = content(p);
    if (p.back() < 0) g = -g;
    for (auto& c : p) c /= g;
    return p;
}

inline ZPoly multiply(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trimmed(std::move(r));
}

inline ZPoly power(const ZPoly& a, unsigned k) {
    ZPoly r{1};
    for (unsigned i = 0; i < k; ++i) r = multiply(r, a);
    return r;
}

/// a / b when the quotient has integer coefficients and the remainder is 0.
inline std::optional<ZPoly> divide_exact(ZPoly a, const ZPoly& b) {
    a = trimmed(std::move(a));
    if (b.empty()) throw Error(ErrorKind::zero_polynomial, "division by zero polynomial");
    if (a.empty()) return ZPoly{};
    if (a.size() < b.size()) return std::nullopt;
    ZPoly q(a.size() - b.size() + 1, 0);
    for (long i = degree(a) - degree(b); i >= 0; --i) {
        const mpz_class& top = a[static_cast<std::size_t>(i) + b.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
        mpz_class c = top / b.back();
        q[static_cast<std::size_t>(i)] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[static_cast<std::size_t>(i) + j] -= c * b[j];
    }
    for (const auto& c : a)
        if (c != 0) return std::nullopt;
    return trimmed(std::move(q));
}

// ---- rational polynomials -------------------------------------------------

inline QPoly to_q(const ZPoly& p) { return QPoly(p.begin(), p.end()); }

/// Primitive integer multiple of a rational polynomial.
inline ZPoly to_primitive_z(const QPoly& p) {
    mpz_class l = 1;
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z;
    for (const auto& c : p) z.push_back(mpz_class(c * l));
    return primitive_part(std::move(z));
}

inline std::pair<QPoly, QPoly> divrem(QPoly a, const QPoly& b) {
    a = trimmed(std::move(a));
    if (a.size() < b.size()) return {QPoly{}, a};
    QPoly q(a.size() - b.size() + 1, 0);
    for (long i = degree(a) - degree(b); i >= 0; --i) {
        mpq_class c = a[static_cast<std::size_t>(i) + b.size() - 1] / b.back();
        q[static_cast<std::size_t>(i)] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[static_cast<std::size_t>(i) + j] -= c * b[j];
    }
    return {trimmed(std::move(q)), trimmed(std::move(a))};
}

/// Primitive gcd over Z (computed over Q).
inline ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    QPoly x = to_q(primitive_part(a)), y = to_q(primitive_part(b));
    while (!y.empty()) {
        QPoly r = divrem(x, y).second;
        x = std::move(y);
        y = to_q(primitive_part(to_primitive_z(r)));
    }
    return primitive_part(to_primitive_z(x));
}

inline ZPoly derivative(const ZPoly& p) {
    ZPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    return trimmed(std::move(d));
}

/// Yun's algorithm on a primitive polynomial: pairs (squarefree factor, multiplicity).
inline std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f) {
    std::vector<std::pair<ZPoly, int>> out;
    ZPoly fp = primitive_part(f);
    if (degree(fp) < 1) return out;
    ZPoly a0 = gcd(fp, derivative(fp));
    ZPoly b = *divide_exact(fp, a0);
    ZPoly c = *divide_exact(derivative(fp), a0);
    auto sub = [](const ZPoly& x, const ZPoly& y) {
        ZPoly r(std::max(x.size(), y.size()), 0);
        for (std::size_t i = 0; i < x.size(); ++i) r[i] += x[i];
        for (std::size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
        return trimmed(std::move(r));
    };
    ZPoly d = sub(c, derivative(b));
    for (int i = 1; degree(b) > 0; ++i) {
        ZPoly a = gcd(b, d);
        ZPoly nb = *divide_exact(b, a);
        ZPoly nc = d.empty() ? ZPoly{} : *divide_exact(d, a);
        if (degree(a) > 0) out.emplace_back(a, i);
        b = std::move(nb);
        d = sub(nc, derivative(b));
    }
    return out;
}

// ---- arithmetic modulo a small prime --------------------------------------

namespace modp {

using Poly = std::vector<std::int64_t>;

inline Poly trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline std::int64_t inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::pair{nt, t - q * nt};
        std::tie(r, nr) = std::pair{nr, r - q * nr};
    }
    return ((t % p) + p) % p;
}

inline Poly reduce(const ZPoly& f, std::int64_t p) {
    Poly r;
    for (const auto& c : f) {
        mpz_class m;
        mpz_fdiv_r_ui(m.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
        r.push_back(m.get_si());
    }
    return trim(std::move(r));
}

inline Poly sub(const Poly& a, const Poly& b, std::int64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = ((r[i] - b[i]) % p + p) % p;
    return trim(std::move(r));
}

inline Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return trim(std::move(r));
}

inline std::pair<Poly, Poly> divrem(Poly a, const Poly& b, std::int64_t p) {
    if (a.size() < b.size()) return {Poly{}, a};
    std::int64_t inv = inverse(b.back(), p);
    Poly q(a.size() - b.size() + 1, 0);
    for (long i = static_cast<long>(a.size() - b.size()); i >= 0; --i) {
        std::int64_t c = a[static_cast<std::size_t>(i) + b.size() - 1] * inv % p;
        q[static_cast<std::size_t>(i)] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto& x = a[static_cast<std::size_t>(i) + j];
            x = ((x - c * b[j]) % p + p) % p;
        }
    }
    return {trim(std::move(q)), trim(std::move(a))};
}

inline Poly monic(Poly a, std::int64_t p) {
    if (a.empty()) return a;
    std::int64_t inv = inverse(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

inline Poly gcd(Poly a, Poly b, std::int64_t p) {
    while (!b.empty()) {
        Poly r = divrem(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a), p);
}

/// s, t with s a + t b = 1 for coprime a, b.
inline std::pair<Poly, Poly> bezout(const Poly& a, const Poly& b, std::int64_t p) {
    Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = divrem(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = sub(s0, mul(q, s1, p), p);
        Poly t2 = sub(t0, mul(q, t1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is a nonzero constant
    std::int64_t inv = inverse(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    return {trim(s0), trim(t0)};
}

inline Poly powmod(Poly base, const mpz_class& e, const Poly& m, std::int64_t p) {
    Poly result{1};
    base = divrem(base, m, p).second;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = divrem(mul(result, result, p), m, p).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = divrem(mul(result, base, p), m, p).second;
    }
    return result;
}

/// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
/// monic squarefree polynomial modulo an odd prime.
inline std::vector<Poly> factor_squarefree(Poly f, std::int64_t p) {
    std::vector<Poly> out;
    std::vector<std::pair<Poly, long>> by_degree;
    Poly h{0, 1};
    const Poly x{0, 1};
    for (long d = 1; 2 * d <= static_cast<long>(f.size()) - 1; ++d) {
        h = powmod(h, mpz_class(p), f, p);
        Poly g = gcd(f, sub(h, x, p), p);
        if (g.size() > 1) {
            by_degree.emplace_back(g, d);
            f = divrem(f, g, p).first;
            h = divrem(h, f, p).second;
        }
    }
    if (f.size() > 1) by_degree.emplace_back(f, static_cast<long>(f.size()) - 1);

    std::mt19937_64 rng(0x5eed);
    for (auto& [g, d] : by_degree) {
        std::vector<Poly> pending{g};
        mpz_class e;
        mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
        e = (e - 1) / 2;
        while (!pending.empty()) {
            Poly u = pending.back();
            pending.pop_back();
            if (static_cast<long>(u.size()) - 1 == d) {
                out.push_back(u);
                continue;
            }
            for (;;) {
                Poly a(u.size() - 1);
                for (auto& c : a) c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
                a = trim(std::move(a));
                if (a.size() < 2) continue;
                Poly b = sub(powmod(a, e, u, p), Poly{1}, p);
                Poly s = gcd(u, b, p);
                if (s.size() > 1 && s.size() < u.size()) {
                    pending.push_back(s);
                    pending.push_back(divrem(u, s, p).first);
                    break;
                }
            }
        }
    }
    return out;
}

} // namespace modp

// ---- Hensel lifting modulo p^k --------------------------------------------

namespace detail {

inline ZPoly mod(ZPoly a, const mpz_class& m) {
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    return trimmed(std::move(a));
}

inline ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trimmed(std::move(r));
}

inline ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return trimmed(std::move(r));
}

inline ZPoly mulmod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    return mod(multiply(a, b), m);
}

/// Division by a monic polynomial modulo m.
inline std::pair<ZPoly, ZPoly> divrem_monic(ZPoly a, const ZPoly& b, const mpz_class& m) {
    a = mod(std::move(a), m);
    if (a.size() < b.size()) return {ZPoly{}, a};
    ZPoly q(a.size() - b.size() + 1, 0);
    for (long i = static_cast<long>(a.size() - b.size()); i >= 0; --i) {
        mpz_class c = a[static_cast<std::size_t>(i) + b.size() - 1];
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        q[static_cast<std::size_t>(i)] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[static_cast<std::size_t>(i) + j] -= c * b[j];
    }
    return {mod(std::move(q), m), mod(std::move(a), m)};
}

inline ZPoly from_modp(const modp::Poly& p) {
    ZPoly r;
    for (auto c : p) r.emplace_back(static_cast<long>(c));
    return trimmed(std::move(r));
}

inline ZPoly scale(ZPoly a, const mpz_class& k) {
    for (auto& c : a) c *= k;
    return trimmed(std::move(a));
}

/// Lifts f = g h (mod p), h monic, to modulus p^(2^steps).
inline std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& f, ZPoly g, ZPoly h, ZPoly s, ZPoly t,
                                           mpz_class m, int steps) {
    for (int i = 0; i < steps; ++i) {
        m *= m;
        ZPoly e = mod(sub(f, multiply(g, h)), m);
        auto [q, r] = divrem_monic(multiply(s, e), h, m);
        ZPoly g2 = mod(add(add(g, multiply(t, e)), multiply(q, g)), m);
        ZPoly h2 = mod(add(h, r), m);
        ZPoly b = mod(sub(add(multiply(s, g2), multiply(t, h2)), ZPoly{1}), m);
        auto [c, d] = divrem_monic(multiply(s, b), h2, m);
        s = mod(sub(s, d), m);
        t = mod(sub(sub(t, multiply(t, b)), multiply(c, g2)), m);
        g = std::move(g2);
        h = std::move(h2);
    }
    return {g, h};
}

/// Monic factors of f modulo p^(2^steps), given its monic factors mod p.
inline std::vector<ZPoly> multifactor_lift(const ZPoly& f, const std::vector<modp::Poly>& factors,
                                           std::int64_t p, int steps, const mpz_class& big) {
    if (factors.size() == 1) {
        mpz_class inv;
        mpz_class lc = f.back();
        mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), big.get_mpz_t());
        return {mod(scale(f, inv), big)};
    }
    std::size_t half = factors.size() / 2;
    std::vector<modp::Poly> left(factors.begin(), factors.begin() + static_cast<long>(half));
    std::vector<modp::Poly> right(factors.begin() + static_cast<long>(half), factors.end());
    modp::Poly g0{modp::reduce(ZPoly{f.back()}, p)};
    for (const auto& x : left) g0 = modp::mul(g0, x, p);
    modp::Poly h0{1};
    for (const auto& x : right) h0 = modp::mul(h0, x, p);
    auto [s0, t0] = modp::bezout(g0, h0, p);
    auto [g, h] = hensel_lift(f, from_modp(g0), from_modp(h0), from_modp(s0), from_modp(t0),
                              mpz_class(static_cast<long>(p)), steps);
    auto a = multifactor_lift(g, left, p, steps, big);
    auto b = multifactor_lift(h, right, p, steps, big);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline ZPoly symmetric(ZPoly a, const mpz_class& m) {
    mpz_class half = m / 2;
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    return trimmed(std::move(a));
}

inline bool is_probable_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Irreducible factors of a primitive squarefree polynomial with lc > 0.
inline std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
    if (degree(f) <= 1) return {f};
    // Pick the candidate prime giving the fewest modular factors.
    std::int64_t best_p = 0;
    std::vector<modp::Poly> best;
    int tried = 0;
    for (std::int64_t p = 3; tried < 5 && p < 100000; p += 2) {
        if (!is_probable_prime(p)) continue;
        modp::Poly fp = modp::reduce(f, p);
        if (static_cast<long>(fp.size()) - 1 != degree(f)) continue;
        modp::Poly dp = modp::reduce(derivative(f), p);
        if (dp.empty() || modp::gcd(fp, dp, p).size() != 1) continue;
        ++tried;
        auto facs = modp::factor_squarefree(modp::monic(fp, p), p);
        if (best_p == 0 || facs.size() < best.size()) {
            best_p = p;
            best = std::move(facs);
        }
        if (best.size() == 1) break;
    }
    if (best.size() == 1) return {f};

    mpz_class maxc = 0;
    for (const auto& c : f) maxc = std::max(maxc, mpz_class(abs(c)));
    mpz_class bound = maxc * mpz_class(f.back()) * static_cast<long>(f.size());
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(degree(f)));
    bound = 2 * bound * two_pow + 1;
    mpz_class m = best_p;
    int steps = 0;
    while (m <= bound) {
        m *= m;
        ++steps;
    }
    std::vector<ZPoly> lifted = multifactor_lift(f, best, best_p, steps, m);

    std::vector<ZPoly> result;
    ZPoly rest = f;
    std::size_t size = 1;
    while (2 * size <= lifted.size()) {
        bool found = false;
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            ZPoly cand{rest.back()};
            for (auto i : idx) cand = mulmod(cand, lifted[i], m);
            cand = primitive_part(symmetric(cand, m));
            if (auto q = divide_exact(rest, cand)) {
                result.push_back(cand);
                rest = *q;
                for (std::size_t k = size; k-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[k]));
                found = true;
                break;
            }
            // next combination
            std::size_t k = size;
            while (k > 0 && idx[k - 1] == lifted.size() - size + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++size;
    }
    if (degree(rest) > 0) result.push_back(primitive_part(rest));
    return result;
}

} // namespace detail

struct Factorization {
    mpz_class unit; // signed content
    std::vector<std::pair<ZPoly, int>> factors;
};

/// f = unit * prod g^m with g irreducible primitive (lc > 0), sorted by
/// degree, then coefficients.
inline Factorization factor(const ZPoly& input) {
    ZPoly f = trimmed(input);
    if (f.empty()) throw Error(ErrorKind::zero_polynomial, "cannot factor the zero polynomial");
    Factorization out;
    out.unit = content(f);
    if (f.back() < 0) out.unit = -out.unit;
    ZPoly g = primitive_part(f);
    std::size_t low = 0;
    while (g[low] == 0) ++low;
    if (low > 0) {
        out.factors.emplace_back(ZPoly{0, 1}, static_cast<int>(low));
        g.erase(g.begin(), g.begin() + static_cast<long>(low));
    }
    for (auto& [s, mult] : squarefree_decomposition(g))
        for (auto& irr : detail::factor_squarefree_z(s)) out.factors.emplace_back(irr, mult);
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return out;
}

} // namespace mirrorkit::univariate
