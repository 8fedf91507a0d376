#include <limits>

#include "doctest.h"
#include "tracecode/arith.hpp"
#include "tracecode/error.hpp"

using namespace tracecode;

TEST_CASE("checked arithmetic throws on overflow") {
    constexpr auto big = std::numeric_limits<std::int64_t>::max();
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(-4, 6) == -24);
    CHECK_THROWS_AS(checked_add(big, 1), Error);
    CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), Error);
    CHECK(checked_pow(7, 4) == 2401);
    CHECK_THROWS_AS(checked_pow(3, 64), Error);
}

TEST_CASE("exact_div rejects remainders") {
    CHECK(exact_div(-12, 4, "t") == -3);
    try {
        exact_div(13, 4, "t");
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::inexact_division);
    }
}

TEST_CASE("modular helpers") {
    CHECK(mod_floor(-1, 5) == 4);
    CHECK(pow_mod(3, 4, 10) == 1);
    CHECK(is_prime(2));
    CHECK(is_prime(2147483647));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));
    CHECK(prime_divisors(728) == std::vector<std::uint64_t>{2, 7, 13});
    CHECK(multiplicative_order(3, 14) == 6);
    CHECK(multiplicative_order(5, 18) == 6);
    CHECK(euler_phi(18) == 6);
}
