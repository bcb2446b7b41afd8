#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mirrorkit {

enum class ErrorKind {
    parse,
    rank_mismatch,
    invalid_argument,
    zero_polynomial,
    degenerate_polytope,
    origin_not_interior,
    not_fano,
    not_unimodular,
    not_primitive,
    not_mutable,
    not_normalised,
    nonzero_constant_term,
    lattice_index,
    insufficient_terms,
    unknown_tag,
    unsupported,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::rank_mismatch: return "rank_mismatch";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::zero_polynomial: return "zero_polynomial";
    case ErrorKind::degenerate_polytope: return "degenerate_polytope";
    case ErrorKind::origin_not_interior: return "origin_not_interior";
    case ErrorKind::not_fano: return "not_fano";
    case ErrorKind::not_unimodular: return "not_unimodular";
    case ErrorKind::not_primitive: return "not_primitive";
    case ErrorKind::not_mutable: return "not_mutable";
    case ErrorKind::not_normalised: return "not_normalised";
    case ErrorKind::nonzero_constant_term: return "nonzero_constant_term";
    case ErrorKind::lattice_index: return "lattice_index";
    case ErrorKind::insufficient_terms: return "insufficient_terms";
    case ErrorKind::unknown_tag: return "unknown_tag";
    case ErrorKind::unsupported: return "unsupported";
    }
    return "unknown";
}

/// Base exception for every precondition or input failure in the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorKind::parse,
                what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace mirrorkit
