#pragma once

#include <stdexcept>
#include <string>

namespace torbord {

enum class errc {
    m_too_small,        // ambient vertex count below 2
    full_simplex,       // complex would be the entire simplex
    vertex_range,       // vertex label outside 1..m
    not_a_face,         // link of a non-face requested
    internal_mismatch,  // two independent computation routes disagree
    nonregular,         // facet cone with |det| != 1 (implementation bug trap)
    nonintegral,        // halving step in basis reduction failed
    degree,             // expression not homogeneous of the pairing degree
    asymmetry,          // coefficients at equal subset size differ
    dimension,          // Pontryagin numbers requested for even m
    range,              // argument outside the supported range
    parse,              // malformed input file
};

/// Library-wide exception; carries a machine-readable code so the CLI can
/// map failures onto its exit-code contract.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace torbord
