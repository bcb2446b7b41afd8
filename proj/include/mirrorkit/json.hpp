#pragma once

// JSON forms of polynomials, polytopes and sequences.
//   polynomial: {"n": 2, "terms": [{"e": [1,0], "c": "1"}, ...]}
//   polytope:   {"n": 2, "vertices": [[1,0],[0,1],[-1,-1]]}
// Rationals travel as decimal strings so nothing is lost to doubles.

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <nlohmann/json.hpp>
#include "mirrorkit/error.hpp"
#include "mirrorkit/laurent.hpp"
#include "mirrorkit/polytope.hpp"

namespace mirrorkit {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

namespace detail {

[[noreturn]] inline void json_error(const std::string& what) { throw Error(ErrorKind::parse, "JSON: " + what); }

inline Rational rational_from_string(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        json_error("bad rational '" + s + "'");
    }
}

inline std::size_t read_rank(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) json_error("missing integer field 'n'");
    auto n = j["n"].get<long long>();
    if (n <= 0) json_error("'n' must be positive");
    return static_cast<std::size_t>(n);
}

inline IntVector read_vector(const Json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n) json_error("vector of length " + std::to_string(n) + " expected");
    IntVector v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) json_error("integer entry expected");
        v.push_back(x.get<Int>());
    }
    return v;
}

} // namespace detail

inline Json to_json(const Rational& q) { return q.get_str(); }

inline Json to_json(const LaurentPolynomial& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({{"e", e}, {"c", c.get_str()}});
    return {{"n", f.rank()}, {"terms", terms}};
}

inline LaurentPolynomial polynomial_from_json(const Json& j) {
    std::size_t n = detail::read_rank(j);
    if (!j.contains("terms") || !j["terms"].is_array()) detail::json_error("missing array field 'terms'");
    LaurentPolynomial f(n);
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("e") || !t.contains("c")) detail::json_error("term needs 'e' and 'c'");
        Rational c;
        if (t["c"].is_string()) c = detail::rational_from_string(t["c"].get<std::string>());
        else if (t["c"].is_number_integer()) c = t["c"].get<long>();
        else detail::json_error("coefficient must be a decimal string");
        f.add_term(detail::read_vector(t["e"], n), c);
    }
    return f;
}

inline Json to_json(const LatticePolytope& P) {
    return {{"n", P.rank()}, {"vertices", P.vertices()}};
}

inline LatticePolytope polytope_from_json(const Json& j) {
    std::size_t n = detail::read_rank(j);
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        detail::json_error("missing non-empty array field 'vertices'");
    std::vector<IntVector> pts;
    for (const auto& v : j["vertices"]) pts.push_back(detail::read_vector(v, n));
    return LatticePolytope::hull(n, pts);
}

inline Json to_json(const DualPolytope& d) {
    Json vs = Json::array();
    for (const auto& v : d.vertices) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(x.get_str());
        vs.push_back(row);
    }
    return {{"n", d.rank}, {"vertices", vs}, {"integral", d.integral}};
}

inline Json to_json(const std::vector<Rational>& seq) {
    Json a = Json::array();
    for (const auto& x : seq) a.push_back(x.get_str());
    return a;
}

inline std::vector<Rational> sequence_from_json(const Json& j) {
    if (!j.is_array()) detail::json_error("sequence must be an array");
    std::vector<Rational> out;
    for (const auto& x : j) {
        if (x.is_string()) out.push_back(detail::rational_from_string(x.get<std::string>()));
        else if (x.is_number_integer()) out.emplace_back(x.get<long>());
        else detail::json_error("sequence entries must be strings or integers");
    }
    return out;
}

} // namespace mirrorkit
