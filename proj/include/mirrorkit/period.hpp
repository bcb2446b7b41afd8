#pragma once

// Classical periods: the sequence of constant terms of f^k.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mirrorkit/error.hpp"
#include "mirrorkit/laurent.hpp"

namespace mirrorkit {

using PeriodSequence = std::vector<Rational>;

/// Incremental computation of coeff_1(f^k). Extending from N to N' > N reuses
/// the running power, so prefixes are identical by construction.
class PeriodStream {
public:
    explicit PeriodStream(LaurentPolynomial f)
        : f_(std::move(f)), power_(LaurentPolynomial::constant(f_.rank(), 1)) {
        if (f_.is_zero()) throw Error(ErrorKind::zero_polynomial, "period of the zero polynomial");
        terms_.push_back(1);
    }

    const PeriodSequence& extend_to(std::size_t n) {
        while (terms_.size() <= n) {
            power_ *= f_;
            terms_.push_back(power_.constant_term());
        }
        return terms_;
    }

    const PeriodSequence& terms() const noexcept { return terms_; }
    const LaurentPolynomial& polynomial() const noexcept { return f_; }

private:
    LaurentPolynomial f_;
    LaurentPolynomial power_;
    PeriodSequence terms_;
};

/// (coeff_1(f^0), ..., coeff_1(f^n)).
inline PeriodSequence classical_period(const LaurentPolynomial& f, std::size_t n) {
    PeriodStream s(f);
    return s.extend_to(n);
}

enum class SeriesFamily { projective_plane, quadric_surface_product, del_pezzo_4, cubic_threefold, custom };

struct KnownSeries {
    SeriesFamily family = SeriesFamily::projective_plane;
    std::function<Rational(std::size_t)> custom; // used by SeriesFamily::custom
};

namespace detail {

inline mpz_class factorial(unsigned long k) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// k! [t^k] exp(-4t) sum_d (2d)!^2/(d!)^5 t^d
inline PeriodSequence del_pezzo_4_series(std::size_t n) {
    std::vector<mpq_class> hyper(n + 1), shift(n + 1);
    for (std::size_t d = 0; d <= n; ++d) {
        mpz_class f2 = factorial(2 * d);
        mpz_class fd = factorial(d);
        hyper[d] = mpq_class(f2 * f2, fd * fd * fd * fd * fd);
        hyper[d].canonicalize();
        mpz_class four_pow;
        mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, d);
        shift[d] = mpq_class((d % 2 ? -1 : 1) * four_pow, fd);
        shift[d].canonicalize();
    }
    PeriodSequence out;
    for (std::size_t k = 0; k <= n; ++k) {
        mpq_class s = 0;
        for (std::size_t i = 0; i <= k; ++i) s += shift[i] * hyper[k - i];
        out.push_back(s * factorial(k));
    }
    return out;
}

} // namespace detail

inline std::optional<SeriesFamily> series_family_from_tag(std::string_view tag) {
    if (tag == "projective-plane") return SeriesFamily::projective_plane;
    if (tag == "quadric-surface-product") return SeriesFamily::quadric_surface_product;
    if (tag == "del-pezzo-4") return SeriesFamily::del_pezzo_4;
    if (tag == "cubic-threefold") return SeriesFamily::cubic_threefold;
    return std::nullopt;
}

/// Closed-form regularized quantum periods used as reference sequences.
inline PeriodSequence known_series(const KnownSeries& series, std::size_t n) {
    PeriodSequence out(n + 1, 0);
    switch (series.family) {
    case SeriesFamily::projective_plane:
        // (3k)!/(k!)^3 at t^{3k}
        for (std::size_t k = 0; 3 * k <= n; ++k) {
            mpz_class fk = detail::factorial(k);
            out[3 * k] = mpz_class(detail::factorial(3 * k) / (fk * fk * fk));
        }
        break;
    case SeriesFamily::quadric_surface_product:
        // sum_m (2k)!/((m!)^2((k-m)!)^2) = C(2k,k)^2 at t^{2k}
        for (std::size_t k = 0; 2 * k <= n; ++k) {
            mpz_class b = detail::binomial(2 * k, k);
            out[2 * k] = b * b;
        }
        break;
    case SeriesFamily::del_pezzo_4:
        out = detail::del_pezzo_4_series(n);
        break;
    case SeriesFamily::cubic_threefold:
        // (2k)!(3k)!/(k!)^5 at t^{2k}
        for (std::size_t k = 0; 2 * k <= n; ++k) {
            mpz_class fk = detail::factorial(k);
            out[2 * k] = mpz_class(detail::factorial(2 * k) * detail::factorial(3 * k) / (fk * fk * fk * fk * fk));
        }
        break;
    case SeriesFamily::custom:
        if (!series.custom) throw Error(ErrorKind::unknown_tag, "custom series without a generator");
        for (std::size_t k = 0; k <= n; ++k) out[k] = series.custom(k);
        break;
    }
    return out;
}

inline PeriodSequence known_series(std::string_view tag, std::size_t n) {
    auto family = series_family_from_tag(tag);
    if (!family) throw Error(ErrorKind::unknown_tag, "unknown series tag '" + std::string(tag) + "'");
    return known_series(KnownSeries{*family, {}}, n);
}

struct PeriodComparison {
    bool agree = true;
    std::optional<std::size_t> first_mismatch;
};

inline PeriodComparison compare_sequences(const PeriodSequence& a, const PeriodSequence& b, std::size_t n) {
    if (a.size() < n + 1 || b.size() < n + 1)
        throw Error(ErrorKind::insufficient_terms, "sequence shorter than the requested comparison depth");
    for (std::size_t k = 0; k <= n; ++k)
        if (a[k] != b[k]) return {false, k};
    return {};
}

/// Term-by-term comparison of the classical period of f with a reference.
inline PeriodComparison periods_agree(const LaurentPolynomial& f, const PeriodSequence& reference, std::size_t n) {
    if (reference.size() < n + 1)
        throw Error(ErrorKind::insufficient_terms,
                    "reference has " + std::to_string(reference.size()) + " terms, need " + std::to_string(n + 1));
    return compare_sequences(classical_period(f, n), reference, n);
}

} // namespace mirrorkit
