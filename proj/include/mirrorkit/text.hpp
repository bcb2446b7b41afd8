#pragma once

// Text form of Laurent polynomials.
//
// Canonical output grammar (what `format` writes):
//   poly  := ['-'] term (('+'|'-') term)*
//   term  := coeff ['*' mono] | mono
//   mono  := var ['^' int] ('*' var ['^' int])*
//   coeff := integer | integer '/' integer
//   var   := x | y | z | w | x<digits>
//
// `parse` accepts a superset: whitespace, parentheses, '/' by a single term,
// '^' with a non-negative exponent on any subexpression, and the alternative
// alphabet a, b, c, d.

#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mirrorkit/error.hpp"
#include "mirrorkit/laurent.hpp"

namespace mirrorkit {

namespace detail {

struct Token {
    enum Kind { number, ident, symbol, end } kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char ch = static_cast<unsigned char>(s[i]);
        if (std::isspace(ch)) {
            ++i;
        } else if (std::isdigit(ch)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::number, std::string(s.substr(i, j - i)), i});
            i = j;
        } else if (std::isalpha(ch)) {
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::ident, std::string(s.substr(i, j - i)), i});
            i = j;
        } else if (std::string_view("+-*/^()").find(s[i]) != std::string_view::npos) {
            out.push_back({Token::symbol, std::string(1, s[i]), i});
            ++i;
        } else {
            throw ParseError(i, std::string("unexpected character '") + s[i] + "'");
        }
    }
    out.push_back({Token::end, "", s.size()});
    return out;
}

enum class Alphabet { none, xyzw, abcd, indexed };

inline std::optional<std::size_t> letter_index(char c, Alphabet a) {
    std::string_view letters = a == Alphabet::xyzw ? "xyzw" : "abcd";
    auto p = letters.find(c);
    if (p == std::string_view::npos) return std::nullopt;
    return p;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, std::size_t rank, Alphabet alphabet)
        : tokens_(std::move(tokens)), rank_(rank), alphabet_(alphabet) {}

    LaurentPolynomial parse_all() {
        LaurentPolynomial p = expr();
        if (peek().kind != Token::end) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
        return p;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    bool accept(const char* sym) {
        if (peek().kind == Token::symbol && peek().text == sym) {
            ++pos_;
            return true;
        }
        return false;
    }

    LaurentPolynomial expr() {
        LaurentPolynomial acc(rank_);
        bool negative = false;
        if (accept("-")) negative = true;
        else accept("+");
        LaurentPolynomial t = term();
        acc += negative ? -t : t;
        for (;;) {
            if (accept("+")) acc += term();
            else if (accept("-")) acc -= term();
            else return acc;
        }
    }

    LaurentPolynomial term() {
        LaurentPolynomial acc = factor();
        for (;;) {
            if (accept("*")) {
                acc *= factor();
            } else if (peek().kind == Token::symbol && peek().text == "/") {
                std::size_t at = peek().pos;
                ++pos_;
                LaurentPolynomial d = factor();
                if (d.size() != 1) throw ParseError(at, "division by a non-monomial");
                acc *= invert_term(d);
            } else {
                return acc;
            }
        }
    }

    LaurentPolynomial factor() {
        LaurentPolynomial base = primary();
        if (!accept("^")) return base;
        std::size_t at = peek().pos;
        bool negative = false;
        if (accept("-")) negative = true;
        else accept("+");
        if (peek().kind != Token::number) throw ParseError(peek().pos, "expected integer exponent");
        long k = std::stol(peek().text);
        ++pos_;
        if (negative) {
            if (base.size() != 1) throw ParseError(at, "negative power of a non-monomial");
            base = invert_term(base);
        }
        return power(base, static_cast<unsigned>(k));
    }

    LaurentPolynomial primary() {
        const Token& t = peek();
        if (t.kind == Token::number) {
            ++pos_;
            return LaurentPolynomial::constant(rank_, Rational(mpz_class(t.text)));
        }
        if (t.kind == Token::ident) {
            ++pos_;
            Exponent e(rank_, 0);
            e[variable_index(t)] = 1;
            return LaurentPolynomial::monomial(e);
        }
        if (accept("(")) {
            LaurentPolynomial inner = expr();
            if (!accept(")")) throw ParseError(peek().pos, "expected ')'");
            return inner;
        }
        throw ParseError(t.pos, t.kind == Token::end ? "unexpected end of input"
                                                     : "unexpected '" + t.text + "'");
    }

    std::size_t variable_index(const Token& t) const {
        if (alphabet_ == Alphabet::indexed) return std::stoul(t.text.substr(1)) - 1;
        return *letter_index(t.text[0], alphabet_);
    }

    LaurentPolynomial invert_term(const LaurentPolynomial& d) const {
        const auto& [e, c] = *d.terms().begin();
        return LaurentPolynomial::monomial(negate(e), 1 / c);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t rank_;
    Alphabet alphabet_;
};

inline std::string variable_name(std::size_t i, std::size_t rank) {
    if (rank <= 4) return std::string(1, "xyzw"[i]);
    return "x" + std::to_string(i + 1);
}

} // namespace detail

/// Parses polynomial text. The rank is the hint when given, otherwise the
/// highest variable index used (1 for constants).
inline LaurentPolynomial parse(std::string_view text, std::optional<std::size_t> rank_hint = {}) {
    using detail::Alphabet;
    auto tokens = detail::tokenize(text);
    Alphabet alphabet = Alphabet::none;
    std::size_t needed = 0;
    for (const auto& t : tokens) {
        if (t.kind != detail::Token::ident) continue;
        Alphabet a;
        std::size_t index;
        if (t.text.size() > 1) {
            if (t.text[0] != 'x') throw ParseError(t.pos, "unknown variable '" + t.text + "'");
            a = Alphabet::indexed;
            index = std::stoul(t.text.substr(1));
            if (index == 0) throw ParseError(t.pos, "variable indices start at 1");
        } else if (detail::letter_index(t.text[0], Alphabet::xyzw)) {
            a = Alphabet::xyzw;
            index = *detail::letter_index(t.text[0], a) + 1;
        } else if (detail::letter_index(t.text[0], Alphabet::abcd)) {
            a = Alphabet::abcd;
            index = *detail::letter_index(t.text[0], a) + 1;
        } else {
            throw ParseError(t.pos, "unknown variable '" + t.text + "'");
        }
        if (alphabet != Alphabet::none && alphabet != a)
            throw ParseError(t.pos, "inconsistent variable set");
        alphabet = a;
        needed = std::max(needed, index);
    }
    std::size_t rank = rank_hint.value_or(std::max<std::size_t>(needed, 1));
    if (rank == 0) throw Error(ErrorKind::invalid_argument, "rank must be positive");
    if (rank < needed)
        throw Error(ErrorKind::rank_mismatch, "expression uses more variables than the rank hint");
    return detail::Parser(std::move(tokens), rank, alphabet).parse_all();
}

inline std::string format(const Rational& q) { return q.get_str(); }

/// Canonical text, terms in decreasing lexicographic exponent order.
inline std::string format(const LaurentPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (c < 0) out += "-";
        else if (!first) out += "+";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += detail::variable_name(i, f.rank());
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) out += mag.get_str();
        else if (mag == 1) out += mono;
        else out += mag.get_str() + "*" + mono;
    }
    return out;
}

} // namespace mirrorkit
