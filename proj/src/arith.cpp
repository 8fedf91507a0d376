#include "tracecode/arith.hpp"

#include <numeric>
#include <string>

namespace tracecode {

std::string_view to_string(Errc code) {
    switch (code) {
    case Errc::invalid_parameter: return "invalid_parameter";
    case Errc::not_prime: return "not_prime";
    case Errc::not_primitive: return "not_primitive";
    case Errc::q_limit_exceeded: return "q_limit_exceeded";
    case Errc::domain: return "domain";
    case Errc::inexact_division: return "inexact_division";
    case Errc::overflow: return "overflow";
    case Errc::internal: return "internal";
    case Errc::io: return "io";
    }
    return "unknown";
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(Errc::overflow, "integer overflow in addition");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(Errc::overflow, "integer overflow in subtraction");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(Errc::overflow, "integer overflow in multiplication");
    return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(r, base, &r))
            throw Error(Errc::overflow, "integer overflow in power");
    }
    return r;
}

std::int64_t exact_div(std::int64_t num, std::int64_t den, std::string_view where) {
    if (den == 0)
        throw Error(Errc::internal, "division by zero in " + std::string(where));
    if (num % den != 0) {
        throw Error(Errc::inexact_division,
                    std::string(where) + ": " + std::to_string(num) + " is not divisible by " +
                        std::to_string(den));
    }
    return num / den;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1)
            r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0)
            return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto d : prime_divisors(n))
        r = r / d * (d - 1);
    return r;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
    if (std::gcd(a, n) != 1)
        throw Error(Errc::invalid_parameter, "multiplicative_order: arguments are not coprime");
    std::uint64_t order = euler_phi(n);
    for (auto r : prime_divisors(order)) {
        while (order % r == 0 && pow_mod(a, order / r, n) == 1)
            order /= r;
    }
    return order;
}

} // namespace tracecode
