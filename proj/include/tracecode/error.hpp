#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tracecode {

enum class Errc {
    invalid_parameter,   // malformed or out-of-range argument
    not_prime,           // p or ell is not a prime
    not_primitive,       // p is not a primitive root modulo 2*ell^m
    q_limit_exceeded,    // field too large for the requested operation
    domain,              // e.g. discrete log of zero, inversion of zero
    inexact_division,    // a closed-form division left a remainder
    overflow,            // checked integer arithmetic overflowed
    internal,            // an invariant the mathematics guarantees was violated
    io,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace tracecode
