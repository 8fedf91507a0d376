#pragma once

// Checked integer helpers and elementary number theory shared by the field,
// character-sum and code modules.

#include <cstdint>
#include <string_view>
#include <vector>

#include "tracecode/error.hpp"

namespace tracecode {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Integer power; throws Errc::overflow past 2^64.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

/// `num / den`, throwing Errc::inexact_division (tagged with `where`) on a remainder.
std::int64_t exact_div(std::int64_t num, std::int64_t den, std::string_view where);

/// Least nonnegative residue.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in ascending order (trial division).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

} // namespace tracecode
